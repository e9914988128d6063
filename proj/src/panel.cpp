#include "netrisk/panel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace netrisk {

std::optional<std::size_t> Panel::period_index(std::string_view period) const {
  auto it = std::lower_bound(periods.begin(), periods.end(), period);
  if (it == periods.end() || *it != period) return std::nullopt;
  return static_cast<std::size_t>(it - periods.begin());
}

std::optional<std::size_t> Panel::country_index(std::string_view country) const {
  auto it = std::lower_bound(countries.begin(), countries.end(), country);
  if (it == countries.end() || *it != country) return std::nullopt;
  return static_cast<std::size_t>(it - countries.begin());
}

Panel build_panel(std::vector<ExposureRecord> exposures,
                  std::vector<RiskInputRecord> risks,
                  TransitionTable transitions) {
  Panel panel;

  std::set<std::string> periods;
  std::set<std::string> exposure_countries;
  for (const auto& e : exposures) {
    periods.insert(e.period);
    exposure_countries.insert(e.reporter);
    exposure_countries.insert(e.counterparty);
  }
  std::set<std::string> countries = exposure_countries;
  for (const auto& r : risks) {
    periods.insert(r.period);
    if (countries.insert(r.country).second && !exposure_countries.contains(r.country)) {
      panel.warnings.push_back("InconsistentCountrySet: " + r.country +
                               " appears in risk inputs but never in exposures");
    }
  }
  std::sort(panel.warnings.begin(), panel.warnings.end());

  // std::set iterates in sorted order; for fixed-width quarter labels the
  // lexicographic order is chronological.
  panel.periods.assign(periods.begin(), periods.end());
  panel.countries.assign(countries.begin(), countries.end());

  panel.exposures.resize(panel.periods.size());
  std::set<std::tuple<std::string, std::string, std::string>> seen_exposures;
  for (auto& e : exposures) {
    if (!seen_exposures.emplace(e.period, e.reporter, e.counterparty).second) {
      throw Error(Errc::duplicate_row, "duplicate exposure (" + e.period + "," + e.reporter + "," +
                                           e.counterparty + ")");
    }
    panel.exposures[*panel.period_index(e.period)].push_back(std::move(e));
  }
  // Canonical within-period order keeps the panel independent of row order.
  for (auto& per_period : panel.exposures) {
    std::sort(per_period.begin(), per_period.end(), [](const auto& a, const auto& b) {
      return std::tie(a.reporter, a.counterparty) < std::tie(b.reporter, b.counterparty);
    });
  }

  const std::size_t n = panel.countries.size();
  panel.risk_inputs.assign(panel.periods.size(), std::vector<RiskInputRecord>(n));
  std::vector<std::vector<bool>> filled(panel.periods.size(), std::vector<bool>(n, false));
  for (auto& r : risks) {
    std::size_t p = *panel.period_index(r.period);
    std::size_t c = *panel.country_index(r.country);
    if (filled[p][c]) {
      throw Error(Errc::duplicate_row, "duplicate risk input (" + r.period + "," + r.country + ")");
    }
    filled[p][c] = true;
    panel.risk_inputs[p][c] = std::move(r);
  }
  for (std::size_t p = 0; p < panel.periods.size(); ++p) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!filled[p][c]) {
        throw Error(Errc::missing_risk_input, "no risk input for period " + panel.periods[p] +
                                                  " country " + panel.countries[c]);
      }
    }
  }

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& per_period : panel.exposures) {
    for (const auto& e : per_period) pairs.emplace(e.reporter, e.counterparty);
  }
  for (const auto& [from, to] : pairs) {
    if (!transitions.contains(from, to)) ++panel.missing_transitions;
  }
  panel.transitions = std::move(transitions);

  return panel;
}

}  // namespace netrisk
