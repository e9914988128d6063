#pragma once

#include <cstdint>
#include <string>

#include "netrisk/mcsim.hpp"
#include "netrisk/network.hpp"
#include "netrisk/riskcore.hpp"

namespace netrisk {

// All emitted numbers use 6 significant digits with '.' as decimal point,
// independent of locale, so identical inputs give byte-identical files.
std::string format_number(double v);

// The double that `format_number` output parses back to; used so JSON values
// render with the same 6-significant-digit precision as text outputs.
double round6(double v);

// Directed DOT graph. Node ids are country codes; every edge carries the raw
// claim as `weight` and a pen width of 1 + log10(1 + claim). Node and edge
// ordering is lexicographic.
std::string export_dot(const ExposureNetwork& network);

// Hand-emitted, self-contained SVG line chart of the series: x axis ticks
// per quarter (every label when <= 26 periods, else every 4th), y axis from
// 0 to 1.05 * max, polyline plus circular markers, title "Systemic Risk
// Index". Throws Errc::empty_series on an empty series.
std::string emit_svg_plot(const SriSeries& series);

// {period, countries[], density, centrality{}, ndp{}, nel, sri}
std::string risk_report_json(const RiskReport& report);

std::string centrality_csv(const CentralityVector& centrality);
std::string centrality_json(const std::string& period, const CentralityVector& centrality);

// Header `period,sri`.
std::string sri_series_csv(const SriSeries& series);

std::string simulate_json(const std::string& period, const CascadeConfig& config,
                          const CascadeEstimate& estimate, double analytic_nel);

}  // namespace netrisk
