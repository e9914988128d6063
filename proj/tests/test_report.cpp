#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fixture_def.hpp"
#include "netrisk/csv.hpp"
#include "netrisk/report.hpp"
#include "testutil.hpp"

using namespace netrisk;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::vector<double> marker_y_positions(const std::string& svg) {
  std::vector<double> ys;
  std::size_t pos = 0;
  while ((pos = svg.find("cy=\"", pos)) != std::string::npos) {
    pos += 4;
    ys.push_back(std::stod(svg.substr(pos)));
  }
  return ys;
}

Panel fixture_panel() {
  auto read = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
  };
  const std::string dir = NETRISK_FIXTURE_DIR;
  return build_panel(parse_exposure_csv(read(dir + "/exposures.csv")),
                     parse_risk_inputs_csv(read(dir + "/risk_inputs.csv")),
                     parse_transitions_csv(read(dir + "/transitions.csv")));
}

}  // namespace

TEST_CASE("numbers render with six significant digits", "[report]") {
  CHECK(format_number(0.14) == "0.14");
  CHECK(format_number(64.0) == "64");
  CHECK(format_number(4.8) == "4.8");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(123456.789) == "123457");
  CHECK(format_number(1234567.0) == "1.23457e+06");
  CHECK(format_number(1.0 + std::log10(101.0)) == "3.00432");
  CHECK(round6(1.0 / 3.0) == 0.333333);
}

TEST_CASE("DOT export carries claims and scaled pen widths", "[report]") {
  SECTION("single edge") {
    Matrix weights(2, 2, 0.0);
    weights(1, 0) = 100.0;  // US -> GB (country order GB, US)
    auto net = make_network("2005Q1", {"GB", "US"}, std::move(weights), 0.0);
    std::string dot = export_dot(net);
    CHECK(dot.find("US -> GB") != std::string::npos);
    CHECK(dot.find("penwidth=3.00432") != std::string::npos);  // 1 + log10(101)
    CHECK(dot.find("weight=100") != std::string::npos);
    auto info = testutil::validate_dot(dot);
    CHECK(info.nodes == 2);
    CHECK(info.edges == 1);
  }
  SECTION("empty network lists nodes only") {
    std::string dot = export_dot(testutil::net_from_edges(3, {}));
    auto info = testutil::validate_dot(dot);
    CHECK(info.nodes == 3);
    CHECK(info.edges == 0);
  }
  SECTION("fixture quarter edge count equals the adjacency ones-count") {
    Panel panel = fixture_panel();
    ExposureNetwork net = build_network(panel, "2005Q1");
    int ones = 0;
    for (double a : net.adjacency.data) ones += a != 0.0 ? 1 : 0;
    CHECK(ones == 380);  // every ordered pair of the 20 countries
    auto info = testutil::validate_dot(export_dot(net));
    CHECK(info.edges == ones);
    CHECK(info.nodes == 20);
  }
  SECTION("output is deterministic") {
    Panel panel = fixture_panel();
    ExposureNetwork net = build_network(panel, "2006Q3");
    CHECK(export_dot(net) == export_dot(net));
  }
}

TEST_CASE("SVG plot mirrors the series", "[report]") {
  SECTION("empty series is rejected") {
    CHECK_THROWS_AS(emit_svg_plot(SriSeries{}), Error);
  }
  SECTION("one point, one marker") {
    SriSeries series;
    series.points.emplace_back("2005Q1", 1.5);
    std::string svg = emit_svg_plot(series);
    CHECK(count_occurrences(svg, "<circle") == 1);
    CHECK(svg.find("Systemic Risk Index") != std::string::npos);
  }
  SECTION("constant series draws a flat line") {
    SriSeries series;
    for (int t = 0; t < 5; ++t) series.points.emplace_back(fixture::period_label(t), 2.0);
    auto ys = marker_y_positions(emit_svg_plot(series));
    REQUIRE(ys.size() == 5);
    for (double y : ys) CHECK(y == ys.front());
  }
  SECTION("the peak quarter owns the topmost marker") {
    SriSeries series;
    for (int t = 0; t < 25; ++t) {
      series.points.emplace_back(fixture::period_label(t), fixture::expected_sri(t));
      if (fixture::expected_sri(t) > series.points[series.argmax_index].second) {
        series.argmax_index = t;
      }
    }
    std::string svg = emit_svg_plot(series);
    auto ys = marker_y_positions(svg);
    REQUIRE(ys.size() == 25);
    std::size_t top = 0;
    for (std::size_t i = 1; i < ys.size(); ++i) {
      if (ys[i] < ys[top]) top = i;  // smaller y is higher on screen
    }
    CHECK(top == static_cast<std::size_t>(fixture::kPeakIndex));
    CHECK(count_occurrences(svg, "2010Q2") >= 1);  // 25 <= 26, so every label renders
    CHECK(emit_svg_plot(series) == emit_svg_plot(series));
  }
}

TEST_CASE("risk report JSON follows the documented schema", "[report]") {
  Panel panel = fixture_panel();
  RiskReport report = risk_report(panel, "2010Q2");
  std::string json = risk_report_json(report);

  const char* keys[] = {"\"period\"", "\"countries\"", "\"density\"", "\"centrality\"",
                        "\"ndp\"",    "\"nel\"",       "\"sri\""};
  std::size_t last = 0;
  for (const char* key : keys) {
    std::size_t pos = json.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos > last);  // schema order preserved
    last = pos;
  }
  CHECK(json.find("\"2010Q2\"") != std::string::npos);
  CHECK(count_occurrences(json, "\"AT\"") == 3);  // countries[], centrality{}, ndp{}
}

TEST_CASE("series CSV uses the period,sri header", "[report]") {
  SriSeries series;
  series.points.emplace_back("2005Q1", 0.5);
  series.points.emplace_back("2005Q2", 1.25);
  std::string csv = sri_series_csv(series);
  CHECK(csv == "period,sri\n2005Q1,0.5\n2005Q2,1.25\n");
}

TEST_CASE("centrality emitters cover both formats", "[report]") {
  auto net = testutil::net_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  auto cent = betweenness(net, Mode::undirected);
  CHECK(centrality_csv(cent) == "country,betweenness\nAA,0\nAB,2\nAC,0\n");
  std::string json = centrality_json("2005Q1", cent);
  CHECK(json.find("\"mode\": \"undirected\"") != std::string::npos);
  CHECK(json.find("\"AB\": 2") != std::string::npos);
}
