#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netrisk/types.hpp"

namespace netrisk {

// Parsers for the three input files. All take the full file contents as text
// (UTF-8, LF or CRLF) and validate the fixed header plus every field; errors
// carry the 1-based line number. Fields are trimmed of surrounding
// whitespace, numbers use '.' as decimal separator and no thousands
// separators.

// Header: period,reporter,counterparty,claim
std::vector<ExposureRecord> parse_exposure_csv(std::string_view text);

// Header: period,country,default_prob,loss,debt_gdp
std::vector<RiskInputRecord> parse_risk_inputs_csv(std::string_view text);

// Header: from,to,q. Diagonal rows are optional and forced to 1.
TransitionTable parse_transitions_csv(std::string_view text);

// Serializers, inverse of the parsers. Numbers use the shortest
// representation that round-trips, so parse(write(records)) == records.
std::string write_exposure_csv(std::span<const ExposureRecord> records);
std::string write_risk_inputs_csv(std::span<const RiskInputRecord> records);
std::string write_transitions_csv(const TransitionTable& table);

}  // namespace netrisk
