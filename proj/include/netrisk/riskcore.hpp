#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netrisk/betweenness.hpp"
#include "netrisk/matrix.hpp"
#include "netrisk/network.hpp"
#include "netrisk/panel.hpp"

namespace netrisk {

// Per-quarter marginal inputs aligned with the panel's country ordering.
struct RiskVectors {
  std::vector<double> dp;        // marginal default probabilities, in [0,1]
  std::vector<double> loss;      // loss per country at default, >= 0
  std::vector<double> debt_gdp;  // debt/GDP ratios, >= 0
};

RiskVectors risk_vectors(const Panel& panel, std::string_view period);

// Conditional transition probabilities masked by the adjacency augmented
// with self-loops: dtm[i][j] = q_ij * adjacency[i][j] for i != j, and
// dtm[i][i] = q_ii = 1.
Matrix default_transition_matrix(const TransitionTable& transitions,
                                 const ExposureNetwork& network);

// ndp[j] = sum_i dp[i] * dtm[i][j]. The result is a first-order contagion
// intensity, not a probability: entries may exceed 1 and are reported
// unclipped unless `clip` is set.
std::vector<double> network_default_probability(std::span<const double> dp,
                                                const Matrix& dtm,
                                                bool clip = false);

// Inner product sum_j ndp[j] * loss[j].
double network_expected_loss(std::span<const double> ndp,
                             std::span<const double> loss);

// SRI = sum_i debt_gdp[i] * g(i), with the centrality values exactly as
// provided. Throws Errc::missing_country if the centrality map lacks a
// country present in debt_gdp.
double systemic_risk_index(const std::map<std::string, double>& debt_gdp,
                           const CentralityVector& centrality);

// Everything the CLI reports for one quarter.
struct RiskReport {
  std::string period;
  std::vector<std::string> countries;
  Matrix dtm;
  std::vector<double> ndp;
  double nel = 0.0;
  double sri = 0.0;
  double density = 0.0;
  CentralityVector centrality;
};

RiskReport risk_report(const Panel& panel, std::string_view period,
                       double threshold = 0.0, Mode mode = Mode::undirected,
                       bool normalized = false, bool clip_ndp = false);

// SRI per quarter, in panel order.
struct SriSeries {
  std::vector<std::pair<std::string, double>> points;
  std::size_t argmax_index = 0;

  const std::string& argmax_period() const;  // Errc::empty_series when empty
  double argmax_value() const;
};

// Builds the network, centrality and SRI for every quarter. Periods are
// evaluated in parallel under Exec::parallel with output identical to the
// serial evaluation; per-period errors are rethrown tagged with the period.
SriSeries sri_series(const Panel& panel, double threshold = 0.0,
                     Mode mode = Mode::undirected, bool normalized = false,
                     Exec exec = Exec::parallel);

}  // namespace netrisk
