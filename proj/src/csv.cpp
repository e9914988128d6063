#include "netrisk/csv.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <tuple>

namespace netrisk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_finite(std::string_view field, int line, std::string_view what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw Error(Errc::malformed_row,
                std::string(what) + " '" + std::string(field) + "' is not a finite number", line);
  }
  return value;
}

std::string check_period(std::string_view field, int line) {
  if (!is_valid_period(field)) {
    throw Error(Errc::bad_period, "'" + std::string(field) + "' does not match YYYYQ[1-4]", line);
  }
  return std::string(field);
}

std::string check_country(std::string_view field, int line) {
  if (!is_valid_country(field)) {
    throw Error(Errc::bad_country_code,
                "'" + std::string(field) + "' is not two uppercase letters", line);
  }
  return std::string(field);
}

// Walks the file line by line: validates the header, skips blank lines, and
// hands each data row's fields to `consume` with its 1-based line number.
template <typename F>
void for_each_row(std::string_view text, std::string_view header, std::size_t columns, F consume) {
  int line_no = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos) ? text.substr(pos)
                                                            : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!saw_header) {
      if (trim(line) != header) {
        throw Error(Errc::malformed_row, "expected header '" + std::string(header) + "'", line_no);
      }
      saw_header = true;
      continue;
    }
    if (trim(line).empty()) continue;

    auto fields = split_fields(line);
    if (fields.size() != columns) {
      throw Error(Errc::malformed_row,
                  "expected " + std::to_string(columns) + " columns, got " +
                      std::to_string(fields.size()), line_no);
    }
    consume(fields, line_no);
  }
  if (!saw_header) {
    throw Error(Errc::malformed_row, "empty input, expected header '" + std::string(header) + "'", 1);
  }
}

void append_shortest(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  out.append(buf, ptr);
}

}  // namespace

std::vector<ExposureRecord> parse_exposure_csv(std::string_view text) {
  std::vector<ExposureRecord> records;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for_each_row(text, "period,reporter,counterparty,claim", 4,
               [&](const std::vector<std::string_view>& f, int line) {
                 ExposureRecord r;
                 r.period = check_period(f[0], line);
                 r.reporter = check_country(f[1], line);
                 r.counterparty = check_country(f[2], line);
                 if (r.reporter == r.counterparty) {
                   throw Error(Errc::self_claim, r.reporter + " reports a claim on itself", line);
                 }
                 r.claim = parse_finite(f[3], line, "claim");
                 if (r.claim < 0.0) {
                   throw Error(Errc::negative_claim, "claim " + std::string(f[3]) + " is negative",
                               line);
                 }
                 if (!seen.emplace(r.period, r.reporter, r.counterparty).second) {
                   throw Error(Errc::duplicate_row,
                               "repeated (" + r.period + "," + r.reporter + "," + r.counterparty + ")",
                               line);
                 }
                 records.push_back(std::move(r));
               });
  return records;
}

std::vector<RiskInputRecord> parse_risk_inputs_csv(std::string_view text) {
  std::vector<RiskInputRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  for_each_row(text, "period,country,default_prob,loss,debt_gdp", 5,
               [&](const std::vector<std::string_view>& f, int line) {
                 RiskInputRecord r;
                 r.period = check_period(f[0], line);
                 r.country = check_country(f[1], line);
                 r.default_prob = parse_finite(f[2], line, "default_prob");
                 if (r.default_prob < 0.0 || r.default_prob > 1.0) {
                   throw Error(Errc::prob_out_of_range,
                               "default_prob " + std::string(f[2]) + " outside [0,1]", line);
                 }
                 r.loss = parse_finite(f[3], line, "loss");
                 r.debt_gdp = parse_finite(f[4], line, "debt_gdp");
                 if (r.loss < 0.0) {
                   throw Error(Errc::negative_value, "loss " + std::string(f[3]) + " is negative",
                               line);
                 }
                 if (r.debt_gdp < 0.0) {
                   throw Error(Errc::negative_value,
                               "debt_gdp " + std::string(f[4]) + " is negative", line);
                 }
                 if (!seen.emplace(r.period, r.country).second) {
                   throw Error(Errc::duplicate_row,
                               "repeated (" + r.period + "," + r.country + ")", line);
                 }
                 records.push_back(std::move(r));
               });
  return records;
}

TransitionTable parse_transitions_csv(std::string_view text) {
  TransitionTable table;
  std::set<std::pair<std::string, std::string>> seen;
  for_each_row(text, "from,to,q", 3, [&](const std::vector<std::string_view>& f, int line) {
    std::string from = check_country(f[0], line);
    std::string to = check_country(f[1], line);
    double q = parse_finite(f[2], line, "q");
    if (q < 0.0 || q > 1.0) {
      throw Error(Errc::prob_out_of_range, "q " + std::string(f[2]) + " outside [0,1]", line);
    }
    if (!seen.emplace(from, to).second) {
      throw Error(Errc::duplicate_row, "repeated (" + from + "," + to + ")", line);
    }
    table.set(from, to, q);
  });
  return table;
}

std::string write_exposure_csv(std::span<const ExposureRecord> records) {
  std::string out = "period,reporter,counterparty,claim\n";
  for (const auto& r : records) {
    out += r.period;
    out += ',';
    out += r.reporter;
    out += ',';
    out += r.counterparty;
    out += ',';
    append_shortest(out, r.claim);
    out += '\n';
  }
  return out;
}

std::string write_risk_inputs_csv(std::span<const RiskInputRecord> records) {
  std::string out = "period,country,default_prob,loss,debt_gdp\n";
  for (const auto& r : records) {
    out += r.period;
    out += ',';
    out += r.country;
    out += ',';
    append_shortest(out, r.default_prob);
    out += ',';
    append_shortest(out, r.loss);
    out += ',';
    append_shortest(out, r.debt_gdp);
    out += '\n';
  }
  return out;
}

std::string write_transitions_csv(const TransitionTable& table) {
  std::string out = "from,to,q\n";
  for (const auto& [key, q] : table.entries()) {
    out += key.first;
    out += ',';
    out += key.second;
    out += ',';
    append_shortest(out, q);
    out += '\n';
  }
  return out;
}

}  // namespace netrisk
