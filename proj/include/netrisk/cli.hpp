#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "netrisk/betweenness.hpp"

namespace netrisk {

// One resolved CLI invocation. The binary's argument parser fills this in;
// run() validates the combination and executes it.
struct RunConfig {
  enum class Cmd { network, centrality, risk, sri, simulate };

  Cmd cmd = Cmd::risk;
  std::string exposures_path;
  std::string risk_inputs_path;
  std::string transitions_path;
  std::string period;    // single quarter label; exclusive with `all`
  bool all = false;
  double threshold = 0.0;
  Mode mode = Mode::undirected;
  bool normalized = false;
  std::string format;    // empty -> subcommand default
  std::string out_path;  // empty -> subcommand default
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
};

// Executes one subcommand: parses the panel, computes, and writes output
// files atomically (temp file + rename) with a one-line summary per file on
// `out`. Returns 0 on success, 1 on data/validation errors (message carries
// file and line where known), 2 on usage errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace netrisk
