#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netrisk/matrix.hpp"
#include "netrisk/panel.hpp"

namespace netrisk {

// Per-quarter directed exposure graph. Row i / column j of weights holds
// reporter i's claim on counterparty j (creditor points to debtor); the
// binary adjacency has a 1 exactly where the claim strictly exceeds the
// threshold. Both diagonals are zero.
struct ExposureNetwork {
  std::string period;
  std::vector<std::string> countries;
  Matrix weights;
  Matrix adjacency;
  double threshold = 0.0;

  int size() const noexcept { return static_cast<int>(countries.size()); }
};

// Canonical constructor: validates the weight matrix (square, non-negative,
// finite, zero diagonal, countries sorted and unique) and derives the
// adjacency from the threshold.
ExposureNetwork make_network(std::string period, std::vector<std::string> countries,
                             Matrix weights, double threshold = 0.0);

// Builds the network for one panel quarter. Throws Errc::unknown_period.
ExposureNetwork build_network(const Panel& panel, std::string_view period,
                              double threshold = 0.0);

// Fraction of the N(N-1) possible directed edges that are present.
// Throws Errc::too_few_nodes for N < 2.
double density(const ExposureNetwork& network);

}  // namespace netrisk
