#pragma once

#include <map>
#include <string>

#include "netrisk/network.hpp"

namespace netrisk {

enum class Mode { directed, undirected };

// Kernel execution policy. Parallel and serial runs are bit-identical: the
// parallel paths accumulate per-source (or per-trial) results into slots
// indexed by the loop variable and reduce them in index order afterwards.
enum class Exec { serial, parallel };

// Betweenness g(i) per node: the sum over ordered pairs (s,t), s != t, both
// distinct from i, of the fraction of shortest s->t paths passing through i.
struct CentralityVector {
  std::map<std::string, double> values;
  Mode mode = Mode::undirected;
  bool normalized = false;
};

// Brandes' algorithm on the unweighted binary adjacency (hop counts; claim
// amounts only decide edge existence). Undirected mode symmetrizes the
// adjacency first. Pairs with no connecting path contribute 0. If normalized,
// values are divided by (N-1)(N-2) for N > 2 and defined as 0 for N <= 2.
// The per-source sweeps run in parallel under Exec::parallel.
CentralityVector betweenness(const ExposureNetwork& network,
                             Mode mode = Mode::undirected,
                             bool normalized = false,
                             Exec exec = Exec::parallel);

// Test oracle: enumerates every shortest path per ordered pair by layered
// BFS expansion and counts interior-vertex occurrences literally. Same
// contract as betweenness; guarded to N <= 10 (Errc::graph_too_large).
CentralityVector betweenness_exhaustive(const ExposureNetwork& network,
                                        Mode mode = Mode::undirected,
                                        bool normalized = false);

}  // namespace netrisk
