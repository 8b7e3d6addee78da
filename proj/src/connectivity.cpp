#include "euler/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "euler/errors.hpp"

namespace euler {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void check_vertex(const Multidigraph& d, VertexId v) {
  if (v >= d.vertex_count()) {
    throw OutOfRangeError("vertex " + std::to_string(v) + " outside 0.." +
                          std::to_string(d.vertex_count() - 1));
  }
}

// Union-find over the undirected footprint; returns a root per vertex.
std::vector<VertexId> weak_roots(const Multidigraph& d) {
  std::vector<VertexId> parent(d.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&parent](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : d.edges()) {
    const VertexId a = find(e.tail);
    const VertexId b = find(e.head);
    if (a != b) parent[a] = b;
  }
  for (VertexId v = 0; v < d.vertex_count(); ++v) parent[v] = find(v);
  return parent;
}

}  // namespace

bool is_weakly_connected(const Multidigraph& d) {
  const auto roots = weak_roots(d);
  return std::all_of(roots.begin(), roots.end(), [&](VertexId r) { return r == roots.front(); });
}

bool is_support_weakly_connected(const Multidigraph& d) {
  const auto roots = weak_roots(d);
  std::size_t root = kUnset;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.is_isolated(v)) continue;
    if (root == kUnset) root = roots[v];
    if (roots[v] != root) return false;
  }
  return true;
}

SccPartition scc(const Multidigraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> index(n, kUnset);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::size_t> raw(n, kUnset);
  std::size_t next_index = 0;
  std::size_t raw_count = 0;

  // Explicit DFS frames: (vertex, position in its out-edge list).
  std::vector<std::pair<VertexId, std::size_t>> frames;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto out = d.out_edges(v);
      if (pos < out.size()) {
        const VertexId w = d.edge(out[pos++]).head;
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const VertexId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw[w] = raw_count;
        } while (w != done);
        ++raw_count;
      }
    }
  }

  SccPartition p;
  p.component.assign(n, 0);
  std::vector<std::size_t> renumber(raw_count, kUnset);
  for (VertexId v = 0; v < n; ++v) {
    if (renumber[raw[v]] == kUnset) renumber[raw[v]] = p.count++;
    p.component[v] = renumber[raw[v]];
  }
  return p;
}

bool is_strongly_connected(const Multidigraph& d) {
  return scc(d).count == 1;
}

bool is_support_strongly_connected(const Multidigraph& d) {
  const auto p = scc(d);
  std::size_t comp = kUnset;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.is_isolated(v)) continue;
    if (comp == kUnset) comp = p.component[v];
    if (p.component[v] != comp) return false;
  }
  return true;
}

std::optional<std::vector<EdgeId>> shortest_dipath(const Multidigraph& d, VertexId from, VertexId to) {
  check_vertex(d, from);
  check_vertex(d, to);
  if (from == to) return std::vector<EdgeId>{};

  std::vector<EdgeId> via(d.vertex_count(), kUnset);
  std::vector<char> seen(d.vertex_count(), 0);
  std::queue<VertexId> queue;
  seen[from] = 1;
  queue.push(from);
  while (!queue.empty() && !seen[to]) {
    const VertexId v = queue.front();
    queue.pop();
    for (const EdgeId e : d.out_edges(v)) {
      const VertexId w = d.edge(e).head;
      if (seen[w]) continue;
      seen[w] = 1;
      via[w] = e;
      queue.push(w);
    }
  }
  if (!seen[to]) return std::nullopt;

  std::vector<EdgeId> path;
  for (VertexId v = to; v != from; v = d.edge(via[v]).tail) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<DicircuitWitness> common_dicircuit(const Multidigraph& d, VertexId x, VertexId y) {
  check_vertex(d, x);
  check_vertex(d, y);
  if (x == y) throw InvalidArgumentError("common_dicircuit needs two distinct vertices");
  auto there = shortest_dipath(d, x, y);
  if (!there) return std::nullopt;
  auto back = shortest_dipath(d, y, x);
  if (!back) return std::nullopt;
  DicircuitWitness w;
  w.edges = std::move(*there);
  w.edges.insert(w.edges.end(), back->begin(), back->end());
  return w;
}

}  // namespace euler
