#include "netrisk/mcsim.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace netrisk {

namespace {

// Flattened transmission channels per origin: (target, q) for every mask-1
// entry of the adjacency augmented with self-loops.
std::vector<std::vector<std::pair<int, double>>> channels(const ExposureNetwork& net,
                                                          const TransitionTable& transitions) {
  const int n = net.size();
  std::vector<std::vector<std::pair<int, double>>> out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out[i].emplace_back(j, 1.0);
      } else if (net.adjacency(i, j) != 0.0) {
        out[i].emplace_back(j, transitions.q(net.countries[i], net.countries[j]));
      }
    }
  }
  return out;
}

}  // namespace

CascadeEstimate simulate_expected_loss(const ExposureNetwork& network,
                                       const TransitionTable& transitions,
                                       std::span<const double> dp, std::span<const double> loss,
                                       const CascadeConfig& config, Exec exec) {
  const int n = network.size();
  if (static_cast<int>(dp.size()) != n || static_cast<int>(loss.size()) != n) {
    throw Error(Errc::dimension_mismatch,
                "network has " + std::to_string(n) + " countries, dp has " +
                    std::to_string(dp.size()) + ", loss has " + std::to_string(loss.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(dp[i]) || dp[i] < 0.0 || dp[i] > 1.0) {
      throw Error(Errc::prob_out_of_range, "dp[" + network.countries[i] + "] outside [0,1]");
    }
  }
  if (config.trials < 1) {
    throw Error(Errc::bad_config, "trials must be >= 1");
  }

  const auto chan = channels(network, transitions);
  const std::int64_t trials = config.trials;

  // One slot per trial; the statistics below read the buffer in trial order,
  // so serial and parallel execution produce bit-identical estimates.
  std::vector<double> losses(static_cast<std::size_t>(trials));

  auto run_trial = [&](std::int64_t t) {
    detail::SplitMix64 rng(detail::trial_seed(config.seed, static_cast<std::uint64_t>(t)));
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      if (rng.next_unit() >= dp[i]) continue;  // node i did not default
      for (const auto& [j, q] : chan[i]) {
        if (rng.next_unit() < q) total += loss[j];
      }
    }
    losses[static_cast<std::size_t>(t)] = total;
  };

  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    for (std::int64_t t = 0; t < trials; ++t) run_trial(t);
  }

  double sum = 0.0;
  for (double x : losses) sum += x;
  const double mean = sum / static_cast<double>(trials);

  double sq = 0.0;
  for (double x : losses) sq += (x - mean) * (x - mean);
  const double sample_var = trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;

  CascadeEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(sample_var / static_cast<double>(trials));
  est.trials = trials;
  return est;
}

}  // namespace netrisk
