#include "netrisk/betweenness.hpp"

#include <vector>

namespace netrisk {

namespace {

std::vector<std::vector<int>> adjacency_lists(const ExposureNetwork& net, Mode mode) {
  const int n = net.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool edge = net.adjacency(i, j) != 0.0;
      if (mode == Mode::undirected) edge = edge || net.adjacency(j, i) != 0.0;
      if (edge) adj[i].push_back(j);
    }
  }
  return adj;
}

struct SourceWorkspace {
  std::vector<int> dist;
  std::vector<double> sigma;
  std::vector<std::vector<int>> preds;
  std::vector<int> order;  // BFS visit order, doubles as the queue
  std::vector<double> delta;

  explicit SourceWorkspace(int n) : dist(n), sigma(n), preds(n), delta(n) { order.reserve(n); }
};

// One Brandes sweep: shortest-path counting BFS from s, then dependency
// accumulation in reverse visit order. ws.delta[v] ends up holding source
// s's contribution to g(v) for every v != s.
void brandes_source(const std::vector<std::vector<int>>& adj, int s, SourceWorkspace& ws) {
  const int n = static_cast<int>(adj.size());
  ws.dist.assign(n, -1);
  ws.sigma.assign(n, 0.0);
  ws.order.clear();
  for (auto& p : ws.preds) p.clear();

  ws.dist[s] = 0;
  ws.sigma[s] = 1.0;
  ws.order.push_back(s);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    int v = ws.order[head];
    for (int w : adj[v]) {
      if (ws.dist[w] < 0) {
        ws.dist[w] = ws.dist[v] + 1;
        ws.order.push_back(w);
      }
      if (ws.dist[w] == ws.dist[v] + 1) {
        ws.sigma[w] += ws.sigma[v];
        ws.preds[w].push_back(v);
      }
    }
  }

  ws.delta.assign(n, 0.0);
  for (std::size_t k = ws.order.size(); k-- > 1;) {
    int w = ws.order[k];
    for (int v : ws.preds[w]) {
      ws.delta[v] += ws.sigma[v] / ws.sigma[w] * (1.0 + ws.delta[w]);
    }
  }
}

CentralityVector wrap(const ExposureNetwork& net, std::vector<double> g, Mode mode,
                      bool normalized) {
  const int n = net.size();
  if (normalized && n > 2) {
    const double scale = 1.0 / (static_cast<double>(n - 1) * (n - 2));
    for (double& v : g) v *= scale;
  }
  // For n <= 2 there is no s != v != t triple, so every value is already 0,
  // which is also the defined normalized value.
  CentralityVector out;
  out.mode = mode;
  out.normalized = normalized;
  for (int i = 0; i < n; ++i) out.values[net.countries[i]] = g[i];
  return out;
}

}  // namespace

CentralityVector betweenness(const ExposureNetwork& network, Mode mode, bool normalized,
                             Exec exec) {
  const int n = network.size();
  const auto adj = adjacency_lists(network, mode);
  std::vector<double> g(n, 0.0);

  if (exec == Exec::parallel && n > 0) {
    // Per-source contributions land in their own row; the reduction below
    // adds rows in source order, so the sums match the serial path bitwise.
    std::vector<double> contrib(static_cast<std::size_t>(n) * n, 0.0);
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
      SourceWorkspace ws(n);  // one workspace per thread
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
      for (int s = 0; s < n; ++s) {
        brandes_source(adj, s, ws);
        double* row = contrib.data() + static_cast<std::size_t>(s) * n;
        for (int v = 0; v < n; ++v) row[v] = ws.delta[v];
      }
    }
    for (int s = 0; s < n; ++s) {
      const double* row = contrib.data() + static_cast<std::size_t>(s) * n;
      for (int v = 0; v < n; ++v) {
        if (v != s) g[v] += row[v];
      }
    }
  } else {
    SourceWorkspace ws(n);
    for (int s = 0; s < n; ++s) {
      brandes_source(adj, s, ws);
      for (int v = 0; v < n; ++v) {
        if (v != s) g[v] += ws.delta[v];
      }
    }
  }

  return wrap(network, std::move(g), mode, normalized);
}

namespace {

// Enumerates every shortest path from s to t backwards through the BFS
// predecessor DAG, bumping the interior-vertex counters for each one.
void count_paths(const std::vector<std::vector<int>>& preds, int s, int v, std::vector<int>& path,
                 std::vector<double>& counts, double& total) {
  path.push_back(v);
  if (v == s) {
    total += 1.0;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) counts[path[k]] += 1.0;
  } else {
    for (int u : preds[v]) count_paths(preds, s, u, path, counts, total);
  }
  path.pop_back();
}

}  // namespace

CentralityVector betweenness_exhaustive(const ExposureNetwork& network, Mode mode,
                                        bool normalized) {
  const int n = network.size();
  if (n > 10) {
    throw Error(Errc::graph_too_large,
                "exhaustive enumeration is limited to 10 nodes, got " + std::to_string(n));
  }
  const auto adj = adjacency_lists(network, mode);
  std::vector<double> g(n, 0.0);

  // Deliberately shares nothing with the Brandes sweep beyond the adjacency:
  // a plain BFS yields distances, the shortest-path DAG is read off them, and
  // paths are enumerated one by one.
  std::vector<int> path;
  std::vector<double> counts(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::vector<int>> preds(n);
    for (int u = 0; u < n; ++u) {
      if (dist[u] < 0) continue;
      for (int v : adj[u]) {
        if (dist[v] == dist[u] + 1) preds[v].push_back(u);
      }
    }
    for (int t = 0; t < n; ++t) {
      if (t == s || dist[t] <= 0) continue;
      counts.assign(n, 0.0);
      double total = 0.0;
      count_paths(preds, s, t, path, counts, total);
      for (int v = 0; v < n; ++v) {
        if (v != s && v != t && counts[v] != 0.0) g[v] += counts[v] / total;
      }
    }
  }

  return wrap(network, std::move(g), mode, normalized);
}

}  // namespace netrisk
