#include "netrisk/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "netrisk/csv.hpp"
#include "netrisk/mcsim.hpp"
#include "netrisk/report.hpp"
#include "netrisk/riskcore.hpp"

namespace netrisk {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::bad_config, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Temp file plus rename, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::bad_config, tmp.string() + ": cannot write");
    out << content;
  }
  fs::rename(tmp, target);
}

std::string default_extension(const RunConfig& cfg) {
  return cfg.format;
}

std::string output_path(const RunConfig& cfg, const std::string& fallback_stem,
                        const std::string& period) {
  fs::path base = cfg.out_path.empty() ? fs::path(fallback_stem + "." + default_extension(cfg))
                                       : fs::path(cfg.out_path);
  if (period.empty()) return base.string();
  fs::path with_period = base.parent_path() / base.stem();
  with_period += "_" + period;
  with_period += base.extension();
  return with_period.string();
}

const char* cmd_name(RunConfig::Cmd cmd) {
  switch (cmd) {
    case RunConfig::Cmd::network: return "network";
    case RunConfig::Cmd::centrality: return "centrality";
    case RunConfig::Cmd::risk: return "risk";
    case RunConfig::Cmd::sri: return "sri";
    case RunConfig::Cmd::simulate: return "simulate";
  }
  return "?";
}

// Fills in the per-subcommand default format and rejects combinations the
// subcommand cannot emit.
std::string resolve_format(const RunConfig& cfg) {
  static const std::map<RunConfig::Cmd, std::vector<std::string>> allowed = {
      {RunConfig::Cmd::network, {"dot"}},
      {RunConfig::Cmd::centrality, {"csv", "json"}},
      {RunConfig::Cmd::risk, {"json"}},
      {RunConfig::Cmd::sri, {"csv", "svg"}},
      {RunConfig::Cmd::simulate, {"json"}},
  };
  const auto& ok = allowed.at(cfg.cmd);
  if (cfg.format.empty()) return ok.front();
  for (const auto& f : ok) {
    if (f == cfg.format) return f;
  }
  throw UsageError("--format " + cfg.format + " is not valid for '" + cmd_name(cfg.cmd) + "'");
}

Panel load_panel(const RunConfig& cfg, std::ostream& err) {
  auto parse_with_context = [](const std::string& path, auto parser) {
    auto text = read_file(path);
    try {
      return parser(text);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what(), e.line());
    }
  };
  auto exposures = parse_with_context(cfg.exposures_path, parse_exposure_csv);
  auto risks = parse_with_context(cfg.risk_inputs_path, parse_risk_inputs_csv);
  auto transitions = parse_with_context(cfg.transitions_path, parse_transitions_csv);
  Panel panel = build_panel(std::move(exposures), std::move(risks), std::move(transitions));
  for (const auto& w : panel.warnings) err << "warning: " << w << "\n";
  if (panel.missing_transitions > 0) {
    err << "note: " << panel.missing_transitions
        << " exposure pair(s) have no transition entry; q defaults to 0\n";
  }
  return panel;
}

std::vector<std::string> selected_periods(const RunConfig& cfg, const Panel& panel) {
  if (cfg.all) return panel.periods;
  if (!panel.period_index(cfg.period)) {
    throw Error(Errc::unknown_period, "period " + cfg.period + " not in panel");
  }
  return {cfg.period};
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = resolve_format(cfg);

  if (cfg.period.empty() && !cfg.all && cfg.cmd != RunConfig::Cmd::sri) {
    throw UsageError("one of --period or --all is required");
  }
  if (!cfg.period.empty() && cfg.all) {
    throw UsageError("--period and --all are mutually exclusive");
  }
  if (!cfg.period.empty() && !is_valid_period(cfg.period)) {
    throw UsageError("--period '" + cfg.period + "' does not match YYYYQ[1-4]");
  }
  if (cfg.cmd == RunConfig::Cmd::simulate && cfg.all) {
    throw UsageError("'simulate' runs on a single --period");
  }
  if (cfg.threshold < 0.0) throw UsageError("--threshold must be non-negative");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");

  RunConfig resolved = cfg;
  resolved.format = format;
  if (resolved.cmd == RunConfig::Cmd::sri && resolved.period.empty()) resolved.all = true;

  Panel panel = load_panel(resolved, err);

  switch (resolved.cmd) {
    case RunConfig::Cmd::network: {
      const auto periods = selected_periods(resolved, panel);
      for (const auto& period : periods) {
        ExposureNetwork net = build_network(panel, period, resolved.threshold);
        int edges = 0;
        for (double a : net.adjacency.data) edges += a != 0.0 ? 1 : 0;
        const std::string path = output_path(resolved, "network", periods.size() > 1 ? period : "");
        write_file_atomic(path, export_dot(net));
        out << "network " << period << ": " << net.size() << " countries, " << edges << " edges";
        if (net.size() >= 2) out << ", density " << format_number(density(net));
        out << " -> " << path << "\n";
      }
      return 0;
    }
    case RunConfig::Cmd::centrality: {
      const auto periods = selected_periods(resolved, panel);
      for (const auto& period : periods) {
        ExposureNetwork net = build_network(panel, period, resolved.threshold);
        CentralityVector cent = betweenness(net, resolved.mode, resolved.normalized);
        const std::string path =
            output_path(resolved, "centrality", periods.size() > 1 ? period : "");
        write_file_atomic(path, format == "json" ? centrality_json(period, cent)
                                                 : centrality_csv(cent));
        out << "centrality " << period << ": mode "
            << (resolved.mode == Mode::directed ? "directed" : "undirected") << ", normalized "
            << (resolved.normalized ? "true" : "false") << " -> " << path << "\n";
      }
      return 0;
    }
    case RunConfig::Cmd::risk: {
      const auto periods = selected_periods(resolved, panel);
      for (const auto& period : periods) {
        RiskReport report =
            risk_report(panel, period, resolved.threshold, resolved.mode, resolved.normalized);
        const std::string path = output_path(resolved, "risk", periods.size() > 1 ? period : "");
        write_file_atomic(path, risk_report_json(report));
        out << "risk " << period << ": nel " << format_number(report.nel) << ", sri "
            << format_number(report.sri) << " -> " << path << "\n";
      }
      return 0;
    }
    case RunConfig::Cmd::sri: {
      SriSeries series;
      if (resolved.all) {
        series = sri_series(panel, resolved.threshold, resolved.mode, resolved.normalized);
      } else {
        selected_periods(resolved, panel);  // validates the period
        ExposureNetwork net = build_network(panel, resolved.period, resolved.threshold);
        CentralityVector cent = betweenness(net, resolved.mode, resolved.normalized);
        RiskVectors rv = risk_vectors(panel, resolved.period);
        std::map<std::string, double> debt;
        for (std::size_t c = 0; c < panel.countries.size(); ++c) {
          debt[panel.countries[c]] = rv.debt_gdp[c];
        }
        series.points.emplace_back(resolved.period, systemic_risk_index(debt, cent));
      }
      const std::string path = output_path(resolved, "sri", "");
      write_file_atomic(path, format == "svg" ? emit_svg_plot(series) : sri_series_csv(series));
      out << "sri: " << series.points.size() << " period(s)";
      if (!series.points.empty()) {
        out << ", argmax " << series.argmax_period() << " (" << format_number(series.argmax_value())
            << ")";
      }
      out << " -> " << path << "\n";
      return 0;
    }
    case RunConfig::Cmd::simulate: {
      selected_periods(resolved, panel);  // validates the period
      ExposureNetwork net = build_network(panel, resolved.period, resolved.threshold);
      RiskVectors rv = risk_vectors(panel, resolved.period);
      CascadeConfig mc{resolved.trials, resolved.seed};
      CascadeEstimate est = simulate_expected_loss(net, panel.transitions, rv.dp, rv.loss, mc);
      Matrix dtm = default_transition_matrix(panel.transitions, net);
      const double nel = network_expected_loss(network_default_probability(rv.dp, dtm), rv.loss);
      const std::string path = output_path(resolved, "simulate", "");
      write_file_atomic(path, simulate_json(resolved.period, mc, est, nel));
      out << "simulate " << resolved.period << ": trials " << mc.trials << ", seed " << mc.seed
          << ", mean " << format_number(est.mean) << ", std_error " << format_number(est.std_error)
          << ", analytic_nel " << format_number(nel) << " -> " << path << "\n";
      return 0;
    }
  }
  return 2;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace netrisk
