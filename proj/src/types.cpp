#include "netrisk/types.hpp"

#include <cctype>
#include <cmath>

namespace netrisk {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_row: return "MalformedRow";
    case Errc::bad_period: return "BadPeriod";
    case Errc::bad_country_code: return "BadCountryCode";
    case Errc::negative_claim: return "NegativeClaim";
    case Errc::self_claim: return "SelfClaim";
    case Errc::duplicate_row: return "DuplicateRow";
    case Errc::prob_out_of_range: return "ProbOutOfRange";
    case Errc::negative_value: return "NegativeValue";
    case Errc::missing_risk_input: return "MissingRiskInput";
    case Errc::unknown_period: return "UnknownPeriod";
    case Errc::too_few_nodes: return "TooFewNodes";
    case Errc::graph_too_large: return "GraphTooLarge";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::missing_country: return "MissingCountry";
    case Errc::empty_series: return "EmptySeries";
    case Errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

namespace {

std::string compose(Errc code, const std::string& message, int line) {
  std::string s(errc_name(code));
  if (line > 0) {
    s += " at line ";
    s += std::to_string(line);
  }
  s += ": ";
  s += message;
  return s;
}

}  // namespace

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(compose(code, message, line)), code_(code), line_(line) {}

bool is_valid_period(std::string_view s) {
  if (s.size() != 6) return false;
  for (int i = 0; i < 4; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return s[4] == 'Q' && s[5] >= '1' && s[5] <= '4';
}

bool is_valid_country(std::string_view s) {
  return s.size() == 2 && s[0] >= 'A' && s[0] <= 'Z' && s[1] >= 'A' && s[1] <= 'Z';
}

void TransitionTable::set(const std::string& from, const std::string& to, double q) {
  if (!is_valid_country(from) || !is_valid_country(to)) {
    throw Error(Errc::bad_country_code,
                "transition entry (" + from + "," + to + ") is not a pair of country codes");
  }
  if (!std::isfinite(q) || q < 0.0 || q > 1.0) {
    throw Error(Errc::prob_out_of_range,
                "q(" + from + "," + to + ") must lie in [0,1]");
  }
  if (from == to) return;  // diagonal reads as 1 regardless
  entries_[Key(from, to)] = q;
}

double TransitionTable::q(const std::string& from, const std::string& to) const {
  if (from == to) return 1.0;
  auto it = entries_.find(Key(from, to));
  return it == entries_.end() ? 0.0 : it->second;
}

bool TransitionTable::contains(const std::string& from, const std::string& to) const {
  return from == to || entries_.contains(Key(from, to));
}

}  // namespace netrisk
