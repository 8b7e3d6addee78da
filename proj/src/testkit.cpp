#include "euler/testkit.hpp"

#include <algorithm>
#include <functional>

namespace euler::testkit {
namespace {

void fill_cells(std::vector<std::size_t>& cells, std::size_t at, std::size_t remaining, std::size_t n,
                std::size_t max_m, std::vector<Multidigraph>& out) {
  if (at == cells.size()) {
    if (remaining == max_m) return;  // no edges
    CountMatrix m(n);
    for (std::size_t i = 0; i < cells.size(); ++i) m(i / n, i % n) = cells[i];
    out.push_back(Multidigraph::from_count_matrix(m));
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    cells[at] = k;
    fill_cells(cells, at + 1, remaining - k, n, max_m, out);
  }
  cells[at] = 0;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Multidigraph shuffled(std::size_t n, std::vector<DiEdge> edges, std::mt19937_64& rng) {
  std::shuffle(edges.begin(), edges.end(), rng);
  return Multidigraph::from_edge_list(n, edges);
}

// Appends a closed walk of `length` edges starting at `start`.
void closed_walk(std::vector<DiEdge>& edges, VertexId start, std::size_t length, std::size_t n,
                 std::mt19937_64& rng) {
  VertexId at = start;
  for (std::size_t i = 0; i + 1 < length; ++i) {
    const VertexId next = pick(rng, 0, n - 1);
    edges.push_back({at, next});
    at = next;
  }
  edges.push_back({at, start});
}

bool connected_by_bfs(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<VertexId> frontier{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId v = frontier.back();
    frontier.pop_back();
    for (const VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

std::vector<Multidigraph> count_matrix_universe(std::size_t max_n, std::size_t max_m) {
  std::vector<Multidigraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::size_t> cells(n * n, 0);
    fill_cells(cells, 0, max_m, n, max_m, out);
  }
  return out;
}

TrailSearch brute_force_trails(const Multidigraph& d) {
  TrailSearch result;
  const std::size_t m = d.edge_count();
  std::vector<char> used(m, 0);
  VertexId origin = 0;

  std::function<void(VertexId, std::size_t)> extend = [&](VertexId at, std::size_t depth) {
    if (depth == m) {
      if (at == origin) {
        result.has_closed = true;
      } else {
        result.has_open = true;
        result.open_endpoints.emplace(origin, at);
      }
      return;
    }
    for (EdgeId e = 0; e < m; ++e) {
      if (used[e] || d.edge(e).tail != at) continue;
      used[e] = 1;
      extend(d.edge(e).head, depth + 1);
      used[e] = 0;
    }
  };
  for (origin = 0; origin < d.vertex_count(); ++origin) extend(origin, 0);
  return result;
}

SccPartition scc_by_closure(const Multidigraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (VertexId v = 0; v < n; ++v) reach[v][v] = 1;
  for (const auto& e : d.edges()) reach[e.tail][e.head] = 1;
  for (VertexId k = 0; k < n; ++k) {
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  SccPartition p;
  p.component.assign(n, n);
  for (VertexId v = 0; v < n; ++v) {
    if (p.component[v] != n) continue;
    for (VertexId w = v; w < n; ++w) {
      if (reach[v][w] && reach[w][v]) p.component[w] = p.count;
    }
    ++p.count;
  }
  return p;
}

BigCount brute_arborescences(const Multidigraph& d, VertexId root) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<EdgeId>> choices(n);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (!d.edge(e).is_loop()) choices[d.edge(e).tail].push_back(e);
  }
  std::vector<EdgeId> parent_edge(n, 0);
  BigCount total = 0;

  auto reaches_root = [&](VertexId v) {
    for (std::size_t steps = 0; steps <= n; ++steps) {
      if (v == root) return true;
      v = d.edge(parent_edge[v]).head;
    }
    return false;
  };
  std::function<void(VertexId)> choose = [&](VertexId v) {
    if (v == n) {
      for (VertexId u = 0; u < n; ++u) {
        if (!reaches_root(u)) return;
      }
      ++total;
      return;
    }
    if (v == root) {
      choose(v + 1);
      return;
    }
    for (const EdgeId e : choices[v]) {
      parent_edge[v] = e;
      choose(v + 1);
    }
  };
  choose(0);
  return total;
}

BigCount closed_trails_by_transitions(const CountMatrix& matrix, VertexId start) {
  const std::size_t n = matrix.size();
  const std::size_t m = matrix.total();
  if (m == 0) return 0;
  CountMatrix left = matrix;
  std::uint64_t sequences = 0;

  std::function<void(VertexId, std::size_t)> step = [&](VertexId at, std::size_t used) {
    if (used == m) {
      if (at == start) ++sequences;
      return;
    }
    for (VertexId w = 0; w < n; ++w) {
      if (left(at, w) == 0) continue;
      --left(at, w);
      step(w, used + 1);
      ++left(at, w);
    }
  };
  step(start, 0);

  BigCount labels = 1;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      for (std::size_t k = 2; k <= matrix(i, j); ++k) labels *= k;
    }
  }
  return BigCount(sequences) * labels;
}

VertexId max_row_vertex(const CountMatrix& m) {
  VertexId best = 0;
  for (VertexId v = 1; v < m.size(); ++v) {
    if (m.row_sum(v) > m.row_sum(best)) best = v;
  }
  return best;
}

Multidigraph random_circuit_eulerian(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = pick(rng, 1, max_n);
  std::vector<DiEdge> edges;
  closed_walk(edges, 0, pick(rng, 1, max_m), n, rng);
  while (edges.size() < max_m && pick(rng, 0, 2) != 0) {
    const VertexId start = edges[pick(rng, 0, edges.size() - 1)].tail;
    closed_walk(edges, start, pick(rng, 1, max_m - edges.size()), n, rng);
  }
  return shuffled(n, std::move(edges), rng);
}

Multidigraph random_balanced(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = pick(rng, 1, max_n);
  std::vector<DiEdge> edges;
  do {
    closed_walk(edges, pick(rng, 0, n - 1), pick(rng, 1, max_m - edges.size()), n, rng);
  } while (edges.size() < max_m && pick(rng, 0, 2) != 0);
  return shuffled(n, std::move(edges), rng);
}

Multidigraph random_multidigraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = pick(rng, 1, max_n);
  std::vector<DiEdge> edges(pick(rng, 0, max_m));
  for (auto& e : edges) e = {pick(rng, 0, n - 1), pick(rng, 0, n - 1)};
  return Multidigraph::from_edge_list(n, edges);
}

MultiGraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = pick(rng, 1, std::min(max_n, max_m + 1));
  // Random attachment gives a spanning tree, then arbitrary extras.
  std::vector<UEdge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({pick(rng, 0, v - 1), v});
  const std::size_t extra = pick(rng, 0, max_m - edges.size());
  for (std::size_t k = 0; k < extra; ++k) edges.push_back({pick(rng, 0, n - 1), pick(rng, 0, n - 1)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return MultiGraph::from_edge_list(n, edges);
}

FStarOracle independent_fstar(std::size_t n) {
  const std::size_t bound = n * (n * (n - 1) / 2);
  const std::size_t max_edges = bound / 2;
  std::vector<std::pair<VertexId, VertexId>> types;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i; j < n; ++j) types.emplace_back(i, j);
  }

  FStarOracle oracle;
  oracle.best = 0;
  std::vector<std::pair<VertexId, VertexId>> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from_type) {
    if (!chosen.empty() && connected_by_bfs(n, chosen)) {
      ++oracle.candidates;
      CountMatrix doubled(n);
      for (const auto& [a, b] : chosen) {
        ++doubled(a, b);
        ++doubled(b, a);
      }
      const BigCount f = closed_trails_by_transitions(doubled, max_row_vertex(doubled));
      if (f > oracle.best) oracle.best = f;
    }
    if (chosen.size() == max_edges) return;
    for (std::size_t t = from_type; t < types.size(); ++t) {
      chosen.push_back(types[t]);
      grow(t);
      chosen.pop_back();
    }
  };
  grow(0);
  return oracle;
}

}  // namespace euler::testkit
