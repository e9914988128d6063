#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace netrisk {

// Error kinds raised by parsing, panel assembly and the analytics layer.
enum class Errc {
  malformed_row,
  bad_period,
  bad_country_code,
  negative_claim,
  self_claim,
  duplicate_row,
  prob_out_of_range,
  negative_value,
  missing_risk_input,
  unknown_period,
  too_few_nodes,
  graph_too_large,
  dimension_mismatch,
  missing_country,
  empty_series,
  bad_config,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message, int line = 0);

  Errc code() const noexcept { return code_; }
  // 1-based input line for file-borne errors, 0 otherwise.
  int line() const noexcept { return line_; }

private:
  Errc code_;
  int line_;
};

// Quarter labels look like "2005Q3". The fixed width makes lexicographic
// order chronological, which panel assembly relies on.
bool is_valid_period(std::string_view s);

// ISO 3166-1 alpha-2, uppercase.
bool is_valid_country(std::string_view s);

// One reporter->counterparty consolidated claim for one quarter, in millions
// of the file's reporting currency.
struct ExposureRecord {
  std::string period;
  std::string reporter;
  std::string counterparty;
  double claim = 0.0;

  friend bool operator==(const ExposureRecord&, const ExposureRecord&) = default;
};

// Per-quarter, per-country marginal default probability, loss at default and
// debt/GDP ratio.
struct RiskInputRecord {
  std::string period;
  std::string country;
  double default_prob = 0.0;
  double loss = 0.0;
  double debt_gdp = 0.0;

  friend bool operator==(const RiskInputRecord&, const RiskInputRecord&) = default;
};

// Sparse table of conditional default probabilities
// q(i,j) = P(j defaults | i defaults). The diagonal is fixed at 1 and missing
// off-diagonal entries read as 0 (no contagion channel).
class TransitionTable {
public:
  using Key = std::pair<std::string, std::string>;

  // Stores q for an ordered country pair. Diagonal entries are accepted but
  // ignored: q(i,i) always reads 1. Throws Errc::prob_out_of_range unless
  // q is finite and in [0,1], Errc::bad_country_code for malformed codes.
  void set(const std::string& from, const std::string& to, double q);

  double q(const std::string& from, const std::string& to) const;
  bool contains(const std::string& from, const std::string& to) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<Key, double>& entries() const noexcept { return entries_; }

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

private:
  std::map<Key, double> entries_;
};

}  // namespace netrisk
