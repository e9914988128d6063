#include "netrisk/network.hpp"

#include <algorithm>
#include <cmath>

namespace netrisk {

ExposureNetwork make_network(std::string period, std::vector<std::string> countries,
                             Matrix weights, double threshold) {
  const int n = static_cast<int>(countries.size());
  if (weights.rows != n || weights.cols != n) {
    throw Error(Errc::dimension_mismatch,
                "weights are " + std::to_string(weights.rows) + "x" + std::to_string(weights.cols) +
                    " for " + std::to_string(n) + " countries");
  }
  if (!std::is_sorted(countries.begin(), countries.end()) ||
      std::adjacent_find(countries.begin(), countries.end()) != countries.end()) {
    throw Error(Errc::bad_config, "countries must be sorted and unique");
  }
  if (!(threshold >= 0.0)) {
    throw Error(Errc::bad_config, "threshold must be non-negative");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double w = weights(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(Errc::negative_claim, "weight (" + countries[i] + "," + countries[j] +
                                              ") is negative or non-finite");
      }
      if (i == j && w != 0.0) {
        throw Error(Errc::self_claim, countries[i] + " has a nonzero self-claim");
      }
    }
  }

  ExposureNetwork net;
  net.period = std::move(period);
  net.countries = std::move(countries);
  net.adjacency = Matrix(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && weights(i, j) > threshold) net.adjacency(i, j) = 1.0;
    }
  }
  net.weights = std::move(weights);
  net.threshold = threshold;
  return net;
}

ExposureNetwork build_network(const Panel& panel, std::string_view period, double threshold) {
  auto p = panel.period_index(period);
  if (!p) {
    throw Error(Errc::unknown_period, "period " + std::string(period) + " not in panel");
  }
  const int n = static_cast<int>(panel.countries.size());
  Matrix weights(n, n, 0.0);
  for (const auto& e : panel.exposures[*p]) {
    int i = static_cast<int>(*panel.country_index(e.reporter));
    int j = static_cast<int>(*panel.country_index(e.counterparty));
    weights(i, j) = e.claim;
  }
  return make_network(std::string(period), panel.countries, std::move(weights), threshold);
}

double density(const ExposureNetwork& network) {
  const int n = network.size();
  if (n < 2) {
    throw Error(Errc::too_few_nodes, "density needs at least 2 countries, got " + std::to_string(n));
  }
  int ones = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (network.adjacency(i, j) != 0.0) ++ones;
    }
  }
  return static_cast<double>(ones) / (static_cast<double>(n) * (n - 1));
}

}  // namespace netrisk
