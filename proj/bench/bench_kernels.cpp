// Compares the serial reference paths against the OpenMP kernels and checks
// that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fixture_def.hpp"
#include "netrisk/betweenness.hpp"
#include "netrisk/csv.hpp"
#include "netrisk/mcsim.hpp"
#include "netrisk/network.hpp"
#include "netrisk/riskcore.hpp"

using namespace netrisk;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> make_codes(int n) {
  std::vector<std::string> codes;
  codes.reserve(n);
  for (int i = 0; i < n; ++i) {
    codes.push_back({static_cast<char>('A' + i / 26), static_cast<char>('A' + i % 26)});
  }
  return codes;
}

ExposureNetwork random_network(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix weights(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && unit(rng) < p) weights(i, j) = 1.0 + 1000.0 * unit(rng);
    }
  }
  return make_network("2005Q1", make_codes(n), std::move(weights), 0.0);
}

void bench_betweenness() {
  const int n = 400;
  ExposureNetwork net = random_network(n, 0.03, 7);

  auto t0 = std::chrono::steady_clock::now();
  CentralityVector serial = betweenness(net, Mode::undirected, false, Exec::serial);
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  CentralityVector parallel = betweenness(net, Mode::undirected, false, Exec::parallel);
  const double parallel_s = seconds_since(t0);

  bool identical = true;
  for (const auto& [code, value] : serial.values) identical &= value == parallel.values.at(code);

  std::printf("betweenness   N=%-5d      serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n", n,
              serial_s, parallel_s, serial_s / parallel_s,
              identical ? "bit-identical" : "MISMATCH");
}

void bench_mcsim() {
  const int n = 20;
  ExposureNetwork net = random_network(n, 0.4, 11);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TransitionTable table;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) table.set(net.countries[i], net.countries[j], unit(rng));
    }
  }
  std::vector<double> dp(n), loss(n);
  for (int i = 0; i < n; ++i) {
    dp[i] = unit(rng);
    loss[i] = 100.0 * unit(rng);
  }
  CascadeConfig config{2000000, 42};

  auto t0 = std::chrono::steady_clock::now();
  CascadeEstimate serial = simulate_expected_loss(net, table, dp, loss, config, Exec::serial);
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  CascadeEstimate parallel = simulate_expected_loss(net, table, dp, loss, config, Exec::parallel);
  const double parallel_s = seconds_since(t0);

  const bool identical =
      serial.mean == parallel.mean && serial.std_error == parallel.std_error;
  std::printf("mcsim         trials=%lld   serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n",
              static_cast<long long>(config.trials), serial_s, parallel_s, serial_s / parallel_s,
              identical ? "bit-identical" : "MISMATCH");
}

void bench_sri_series() {
  Panel panel = build_panel(parse_exposure_csv(fixture::exposures_csv()),
                            parse_risk_inputs_csv(fixture::risk_inputs_csv()),
                            parse_transitions_csv(fixture::transitions_csv()));

  auto t0 = std::chrono::steady_clock::now();
  SriSeries serial = sri_series(panel, 0.0, Mode::undirected, false, Exec::serial);
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  SriSeries parallel = sri_series(panel, 0.0, Mode::undirected, false, Exec::parallel);
  const double parallel_s = seconds_since(t0);

  bool identical = serial.points == parallel.points;
  std::printf("sri_series    periods=%-4zu serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n",
              serial.points.size(), serial_s, parallel_s, serial_s / parallel_s,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled, parallel paths run serially\n");
#endif
  bench_betweenness();
  bench_mcsim();
  bench_sri_series();
  return 0;
}
