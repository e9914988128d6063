#include "netrisk/riskcore.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>

namespace netrisk {

RiskVectors risk_vectors(const Panel& panel, std::string_view period) {
  auto p = panel.period_index(period);
  if (!p) {
    throw Error(Errc::unknown_period, "period " + std::string(period) + " not in panel");
  }
  RiskVectors rv;
  rv.dp.reserve(panel.countries.size());
  rv.loss.reserve(panel.countries.size());
  rv.debt_gdp.reserve(panel.countries.size());
  for (const auto& r : panel.risk_inputs[*p]) {
    rv.dp.push_back(r.default_prob);
    rv.loss.push_back(r.loss);
    rv.debt_gdp.push_back(r.debt_gdp);
  }
  return rv;
}

Matrix default_transition_matrix(const TransitionTable& transitions,
                                 const ExposureNetwork& network) {
  const int n = network.size();
  Matrix dtm(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        dtm(i, j) = 1.0;  // self-loop mask keeps q_ii = 1 on the diagonal
      } else {
        dtm(i, j) = transitions.q(network.countries[i], network.countries[j]) *
                    network.adjacency(i, j);
      }
    }
  }
  return dtm;
}

std::vector<double> network_default_probability(std::span<const double> dp, const Matrix& dtm,
                                                bool clip) {
  const int n = dtm.rows;
  if (dtm.cols != n || static_cast<int>(dp.size()) != n) {
    throw Error(Errc::dimension_mismatch,
                "dp has " + std::to_string(dp.size()) + " entries for a " + std::to_string(n) +
                    "x" + std::to_string(dtm.cols) + " transition matrix");
  }
  std::vector<double> ndp(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += dp[i] * dtm(i, j);
    ndp[j] = clip ? std::clamp(sum, 0.0, 1.0) : sum;
  }
  return ndp;
}

double network_expected_loss(std::span<const double> ndp, std::span<const double> loss) {
  if (ndp.size() != loss.size()) {
    throw Error(Errc::dimension_mismatch, "ndp has " + std::to_string(ndp.size()) +
                                              " entries, loss has " + std::to_string(loss.size()));
  }
  double nel = 0.0;
  for (std::size_t j = 0; j < ndp.size(); ++j) nel += ndp[j] * loss[j];
  return nel;
}

double systemic_risk_index(const std::map<std::string, double>& debt_gdp,
                           const CentralityVector& centrality) {
  double sri = 0.0;
  for (const auto& [country, d] : debt_gdp) {
    auto it = centrality.values.find(country);
    if (it == centrality.values.end()) {
      throw Error(Errc::missing_country, "no centrality value for " + country);
    }
    sri += d * it->second;
  }
  return sri;
}

namespace {

double sri_for_period(const Panel& panel, std::size_t p, double threshold, Mode mode,
                      bool normalized) {
  ExposureNetwork net = build_network(panel, panel.periods[p], threshold);
  CentralityVector cent = betweenness(net, mode, normalized, Exec::serial);
  double sri = 0.0;
  // Countries and risk inputs share one ordering, so the map lookup of
  // systemic_risk_index is not needed on this path.
  for (std::size_t c = 0; c < panel.countries.size(); ++c) {
    sri += panel.risk_inputs[p][c].debt_gdp * cent.values.find(panel.countries[c])->second;
  }
  return sri;
}

}  // namespace

RiskReport risk_report(const Panel& panel, std::string_view period, double threshold, Mode mode,
                       bool normalized, bool clip_ndp) {
  RiskReport report;
  report.period = std::string(period);
  ExposureNetwork net = build_network(panel, period, threshold);
  RiskVectors rv = risk_vectors(panel, period);

  report.countries = panel.countries;
  report.dtm = default_transition_matrix(panel.transitions, net);
  report.ndp = network_default_probability(rv.dp, report.dtm, clip_ndp);
  report.nel = network_expected_loss(report.ndp, rv.loss);
  report.density = density(net);
  report.centrality = betweenness(net, mode, normalized);

  std::map<std::string, double> debt;
  for (std::size_t c = 0; c < panel.countries.size(); ++c) {
    debt[panel.countries[c]] = rv.debt_gdp[c];
  }
  report.sri = systemic_risk_index(debt, report.centrality);
  return report;
}

const std::string& SriSeries::argmax_period() const {
  if (points.empty()) throw Error(Errc::empty_series, "series has no points");
  return points[argmax_index].first;
}

double SriSeries::argmax_value() const {
  if (points.empty()) throw Error(Errc::empty_series, "series has no points");
  return points[argmax_index].second;
}

SriSeries sri_series(const Panel& panel, double threshold, Mode mode, bool normalized, Exec exec) {
  const std::size_t m = panel.periods.size();
  SriSeries series;
  series.points.resize(m);

  // Each period is evaluated independently and written to its own slot, so
  // the parallel schedule cannot change the result. Exceptions may not cross
  // the parallel region; the earliest period's error is rethrown after it.
  std::unique_ptr<Error> first_error;
  std::size_t first_error_period = m;

  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t p = 0; p < m; ++p) {
      try {
        series.points[p] = {panel.periods[p], sri_for_period(panel, p, threshold, mode, normalized)};
      } catch (const Error& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (p < first_error_period) {
            first_error_period = p;
            first_error = std::make_unique<Error>(e);
          }
        }
      }
    }
  } else {
    for (std::size_t p = 0; p < m; ++p) {
      try {
        series.points[p] = {panel.periods[p], sri_for_period(panel, p, threshold, mode, normalized)};
      } catch (const Error& e) {
        first_error_period = p;
        first_error = std::make_unique<Error>(e);
        break;
      }
    }
  }
  if (first_error) {
    throw Error(first_error->code(),
                "period " + panel.periods[first_error_period] + ": " + first_error->what(),
                first_error->line());
  }

  for (std::size_t p = 0; p < m; ++p) {
    if (series.points[p].second > series.points[series.argmax_index].second) {
      series.argmax_index = p;
    }
  }
  return series;
}

}  // namespace netrisk
