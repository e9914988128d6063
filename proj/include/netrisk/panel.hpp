#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netrisk/types.hpp"

namespace netrisk {

// Aligned quarterly panel. Periods are chronological and countries are in
// lexicographic order of their codes; the country ordering defines the row
// and column indices of every matrix derived downstream.
struct Panel {
  std::vector<std::string> periods;
  std::vector<std::string> countries;

  // exposures[p]: records for periods[p], sorted by (reporter, counterparty).
  std::vector<std::vector<ExposureRecord>> exposures;
  // risk_inputs[p][c]: the record for (periods[p], countries[c]).
  std::vector<std::vector<RiskInputRecord>> risk_inputs;

  TransitionTable transitions;

  // Distinct (reporter, counterparty) pairs seen in exposures that have no
  // transition entry; such channels carry q = 0.
  int missing_transitions = 0;
  std::vector<std::string> warnings;

  std::optional<std::size_t> period_index(std::string_view period) const;
  std::optional<std::size_t> country_index(std::string_view country) const;

  friend bool operator==(const Panel&, const Panel&) = default;
};

// Assembles a panel from individually valid inputs. The period set is the
// union of periods seen in exposures and risk inputs, likewise for countries;
// a country appearing only in risk inputs is kept and reported as a warning.
// Every (period, country) pair must have exactly one risk record, otherwise
// Errc::missing_risk_input (or Errc::duplicate_row) names the offender.
// Output is independent of input row order.
Panel build_panel(std::vector<ExposureRecord> exposures,
                  std::vector<RiskInputRecord> risks,
                  TransitionTable transitions);

}  // namespace netrisk
