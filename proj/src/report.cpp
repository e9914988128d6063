#include "netrisk/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace netrisk {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double round6(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string export_dot(const ExposureNetwork& network) {
  const int n = network.size();
  std::string dot = "digraph \"" + network.period + "\" {\n";
  for (const auto& country : network.countries) {
    dot += "  " + country + ";\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (network.adjacency(i, j) == 0.0) continue;
      const double claim = network.weights(i, j);
      dot += "  " + network.countries[i] + " -> " + network.countries[j] +
             " [weight=" + format_number(claim) +
             ", penwidth=" + format_number(1.0 + std::log10(1.0 + claim)) + "];\n";
    }
  }
  dot += "}\n";
  return dot;
}

namespace {

constexpr double kSvgWidth = 960.0;
constexpr double kSvgHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string svg_text(double x, double y, const std::string& anchor, int font_size,
                     const std::string& body) {
  return "  <text x=\"" + format_number(x) + "\" y=\"" + format_number(y) +
         "\" text-anchor=\"" + anchor + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(font_size) + "\">" + body + "</text>\n";
}

std::string svg_line(double x1, double y1, double x2, double y2, const std::string& stroke) {
  return "  <line x1=\"" + format_number(x1) + "\" y1=\"" + format_number(y1) + "\" x2=\"" +
         format_number(x2) + "\" y2=\"" + format_number(y2) + "\" stroke=\"" + stroke + "\"/>\n";
}

}  // namespace

std::string emit_svg_plot(const SriSeries& series) {
  const std::size_t n = series.points.size();
  if (n == 0) throw Error(Errc::empty_series, "cannot plot an empty series");

  double max_value = 0.0;
  for (const auto& [period, value] : series.points) max_value = std::max(max_value, value);
  const double y_top = max_value > 0.0 ? 1.05 * max_value : 1.0;

  const double plot_w = kSvgWidth - kMarginLeft - kMarginRight;
  const double plot_h = kSvgHeight - kMarginTop - kMarginBottom;
  const double x_axis_y = kMarginTop + plot_h;

  auto x_of = [&](std::size_t i) {
    if (n == 1) return kMarginLeft + plot_w / 2.0;
    return kMarginLeft + static_cast<double>(i) * plot_w / static_cast<double>(n - 1);
  };
  auto y_of = [&](double v) { return kMarginTop + plot_h * (1.0 - v / y_top); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    format_number(kSvgWidth) + "\" height=\"" + format_number(kSvgHeight) +
                    "\" viewBox=\"0 0 " + format_number(kSvgWidth) + " " +
                    format_number(kSvgHeight) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += svg_text(kSvgWidth / 2.0, 28.0, "middle", 16, "Systemic Risk Index");

  svg += svg_line(kMarginLeft, kMarginTop, kMarginLeft, x_axis_y, "black");
  svg += svg_line(kMarginLeft, x_axis_y, kMarginLeft + plot_w, x_axis_y, "black");

  for (int tick = 0; tick <= 4; ++tick) {
    const double v = y_top * tick / 4.0;
    const double y = y_of(v);
    svg += svg_line(kMarginLeft - 4.0, y, kMarginLeft, y, "black");
    svg += svg_text(kMarginLeft - 8.0, y + 3.0, "end", 10, format_number(v));
  }

  const std::size_t label_step = n <= 26 ? 1 : 4;
  for (std::size_t i = 0; i < n; i += label_step) {
    svg += svg_text(x_of(i), x_axis_y + 16.0, "middle", 8, series.points[i].first);
  }

  std::string points;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) points += ' ';
    points += format_number(x_of(i)) + "," + format_number(y_of(series.points[i].second));
  }
  svg += "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" + points +
         "\"/>\n";
  for (std::size_t i = 0; i < n; ++i) {
    svg += "  <circle cx=\"" + format_number(x_of(i)) + "\" cy=\"" +
           format_number(y_of(series.points[i].second)) + "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string risk_report_json(const RiskReport& report) {
  nlohmann::ordered_json j;
  j["period"] = report.period;
  j["countries"] = report.countries;
  j["density"] = round6(report.density);
  auto centrality = nlohmann::ordered_json::object();
  for (const auto& country : report.countries) {
    centrality[country] = round6(report.centrality.values.at(country));
  }
  j["centrality"] = std::move(centrality);
  auto ndp = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < report.countries.size(); ++c) {
    ndp[report.countries[c]] = round6(report.ndp[c]);
  }
  j["ndp"] = std::move(ndp);
  j["nel"] = round6(report.nel);
  j["sri"] = round6(report.sri);
  return j.dump(2) + "\n";
}

std::string centrality_csv(const CentralityVector& centrality) {
  std::string out = "country,betweenness\n";
  for (const auto& [country, value] : centrality.values) {
    out += country + "," + format_number(value) + "\n";
  }
  return out;
}

std::string centrality_json(const std::string& period, const CentralityVector& centrality) {
  nlohmann::ordered_json j;
  j["period"] = period;
  j["mode"] = centrality.mode == Mode::directed ? "directed" : "undirected";
  j["normalized"] = centrality.normalized;
  auto values = nlohmann::ordered_json::object();
  for (const auto& [country, value] : centrality.values) values[country] = round6(value);
  j["centrality"] = std::move(values);
  return j.dump(2) + "\n";
}

std::string sri_series_csv(const SriSeries& series) {
  std::string out = "period,sri\n";
  for (const auto& [period, value] : series.points) {
    out += period + "," + format_number(value) + "\n";
  }
  return out;
}

std::string simulate_json(const std::string& period, const CascadeConfig& config,
                          const CascadeEstimate& estimate, double analytic_nel) {
  nlohmann::ordered_json j;
  j["period"] = period;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["mean"] = round6(estimate.mean);
  j["std_error"] = round6(estimate.std_error);
  j["analytic_nel"] = round6(analytic_nel);
  return j.dump(2) + "\n";
}

}  // namespace netrisk
