#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "netrisk/cli.hpp"

namespace {

void add_common_options(CLI::App* sub, netrisk::RunConfig& cfg, bool with_mode) {
  sub->add_option("--exposures", cfg.exposures_path, "exposures CSV (period,reporter,counterparty,claim)")
      ->required();
  sub->add_option("--risk-inputs", cfg.risk_inputs_path,
                  "risk inputs CSV (period,country,default_prob,loss,debt_gdp)")
      ->required();
  sub->add_option("--transitions", cfg.transitions_path, "transition CSV (from,to,q)")->required();
  sub->add_option("--period", cfg.period, "quarter label, e.g. 2009Q4");
  sub->add_flag("--all", cfg.all, "run over every quarter in the panel");
  sub->add_option("--threshold", cfg.threshold, "claim threshold for an edge (default 0)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out", cfg.out_path, "output path (default <subcommand>.<ext>)");
  if (with_mode) {
    sub->add_option("--mode", [&cfg](const CLI::results_t& r) {
          cfg.mode = r[0] == "directed" ? netrisk::Mode::directed : netrisk::Mode::undirected;
          return true;
        }, "shortest-path mode: directed|undirected (default undirected)")
        ->check(CLI::IsMember({"directed", "undirected"}));
    sub->add_flag("--normalized", cfg.normalized, "divide betweenness by (N-1)(N-2)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netrisk - sovereign debt network risk toolkit"};
  app.require_subcommand(1);

  netrisk::RunConfig cfg;

  auto* network = app.add_subcommand("network", "export a quarter's exposure network as DOT");
  add_common_options(network, cfg, false);
  network->add_option("--format", cfg.format, "dot")->check(CLI::IsMember({"dot"}));

  auto* centrality = app.add_subcommand("centrality", "betweenness centrality per country");
  add_common_options(centrality, cfg, true);
  centrality->add_option("--format", cfg.format, "csv|json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* risk = app.add_subcommand("risk", "full risk report (DTM, NDP, NEL, SRI) as JSON");
  add_common_options(risk, cfg, true);
  risk->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

  auto* sri = app.add_subcommand("sri", "systemic risk index series (CSV or SVG plot)");
  add_common_options(sri, cfg, true);
  sri->add_option("--format", cfg.format, "csv|svg (default csv)")
      ->check(CLI::IsMember({"csv", "svg"}));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the expected loss");
  add_common_options(simulate, cfg, false);
  simulate->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
  simulate->add_option("--trials", cfg.trials, "number of trials (default 100000)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed, "RNG seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (network->parsed()) cfg.cmd = netrisk::RunConfig::Cmd::network;
  if (centrality->parsed()) cfg.cmd = netrisk::RunConfig::Cmd::centrality;
  if (risk->parsed()) cfg.cmd = netrisk::RunConfig::Cmd::risk;
  if (sri->parsed()) cfg.cmd = netrisk::RunConfig::Cmd::sri;
  if (simulate->parsed()) cfg.cmd = netrisk::RunConfig::Cmd::simulate;

  return netrisk::run(cfg, std::cout, std::cerr);
}
