#pragma once

// Deterministic synthetic demo panel: 20 countries over the 25 quarters
// 2005Q1..2011Q1. Quarter 0 is a complete digraph. Every later quarter is a
// hub-block graph: a set of hub countries forms a clique, every other
// country (a leaf) links to every hub in both directions, and leaves never
// link to each other. All leaf-to-leaf shortest paths then run through the
// hubs, so each hub's betweenness is exactly L(L-1)/h for L leaves and h
// hubs, and the quarter's SRI is d_hub * L * (L-1). The schedules below
// shrink the hub set and raise the hub debt ratio over time, producing a
// rising SRI series with a pronounced peak at 2010Q2 (index 21).
//
// Every numeric field is written as an exact decimal string, so regenerating
// the files is byte-stable and parsing loses nothing.

#include <cstdio>
#include <string>

namespace netrisk::fixture {

inline constexpr int kCountryCount = 20;
inline constexpr const char* kCountries[kCountryCount] = {
    "AT", "AU", "BE", "CA", "CH", "DE", "ES", "FI", "FR", "GB",
    "GR", "IE", "IT", "JP", "NL", "PT", "SE", "TR", "TW", "US"};

inline constexpr int kQuarterCount = 25;
inline constexpr int kPeakIndex = 21;  // 2010Q2

// Hub count per quarter; 0 marks the complete-graph quarter.
inline constexpr int kHubCount[kQuarterCount] = {0, 6, 6, 6, 5, 5, 5, 5, 4, 4, 4, 4, 3,
                                                 3, 3, 3, 2, 2, 2, 2, 2, 1, 2, 3, 3};

// Hub debt/GDP ratio per quarter, in hundredths.
inline constexpr int kHubDebtCenti[kQuarterCount] = {0,  50, 55, 60, 55, 60, 65, 70, 62,
                                                     66, 70, 74, 66, 70, 75, 80, 72, 78,
                                                     84, 90, 96, 160, 85, 75, 65};

inline std::string period_label(int t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04dQ%d", 2005 + t / 4, t % 4 + 1);
  return buf;
}

inline bool is_hub(int country, int t) {
  const int h = kHubCount[t];
  const int start = (3 * t) % kCountryCount;
  return (country - start + kCountryCount) % kCountryCount < h;
}

inline bool has_edge(int i, int j, int t) {
  if (i == j) return false;
  if (t == 0) return true;
  return is_hub(i, t) || is_hub(j, t);  // only leaf-to-leaf pairs are absent
}

// claim(i,j,t) in [50, 5037.5], varying in steps of 12.5
inline std::string claim_string(int i, int j, int t) {
  const int halves = 100 + 25 * ((31 * i + 37 * j + 13 * t) % 400);
  std::string s = std::to_string(halves / 2);
  if (halves % 2) s += ".5";
  return s;
}

inline std::string default_prob_string(int i, int t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0.%03d", 10 + 5 * ((i + t) % 10));
  return buf;
}

inline std::string loss_string(int i, int t) {
  return std::to_string(100 * (1 + (3 * i + t) % 15));
}

inline std::string debt_gdp_string(int i, int t) {
  const int centi = is_hub(i, t) ? kHubDebtCenti[t] : 30 + (i + t) % 8;
  char buf[16];
  std::snprintf(buf, sizeof buf, "%d.%02d", centi / 100, centi % 100);
  return buf;
}

inline std::string transition_string(int i, int j) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0.%03d", 50 + 5 * ((11 * i + 17 * j) % 100));
  return buf;
}

inline std::string exposures_csv() {
  std::string out = "period,reporter,counterparty,claim\n";
  for (int t = 0; t < kQuarterCount; ++t) {
    const std::string period = period_label(t);
    for (int i = 0; i < kCountryCount; ++i) {
      for (int j = 0; j < kCountryCount; ++j) {
        if (!has_edge(i, j, t)) continue;
        out += period + "," + kCountries[i] + "," + kCountries[j] + "," + claim_string(i, j, t) +
               "\n";
      }
    }
  }
  return out;
}

inline std::string risk_inputs_csv() {
  std::string out = "period,country,default_prob,loss,debt_gdp\n";
  for (int t = 0; t < kQuarterCount; ++t) {
    const std::string period = period_label(t);
    for (int i = 0; i < kCountryCount; ++i) {
      out += period + "," + kCountries[i] + "," + default_prob_string(i, t) + "," +
             loss_string(i, t) + "," + debt_gdp_string(i, t) + "\n";
    }
  }
  return out;
}

inline std::string transitions_csv() {
  std::string out = "from,to,q\n";
  for (int i = 0; i < kCountryCount; ++i) {
    for (int j = 0; j < kCountryCount; ++j) {
      if (i == j) continue;
      out += std::string(kCountries[i]) + "," + kCountries[j] + "," + transition_string(i, j) +
             "\n";
    }
  }
  return out;
}

// Closed-form SRI for quarter t under the construction above; an independent
// check for the pipeline's series.
inline double expected_sri(int t) {
  const int h = kHubCount[t];
  if (h == 0) return 0.0;  // complete graph: every betweenness value is 0
  const int leaves = kCountryCount - h;
  return (kHubDebtCenti[t] / 100.0) * leaves * (leaves - 1);
}

}  // namespace netrisk::fixture
