#include "euler/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "euler/errors.hpp"

namespace euler {
namespace {

void require_vertices(std::size_t n) {
  if (n == 0) {
    throw InvalidArgumentError("graph needs at least one vertex");
  }
}

[[noreturn]] void throw_out_of_range(std::size_t index, VertexId a, VertexId b, std::size_t n) {
  std::ostringstream msg;
  msg << "edge " << index << " (" << a << ", " << b << ") has an endpoint outside 0.." << n - 1;
  throw OutOfRangeError(msg.str());
}

// Bucket edge ids by a key vertex. Ids stay ascending inside each bucket.
template <typename KeyFn>
void build_csr(std::size_t n, std::size_t m, KeyFn key, std::vector<std::size_t>& start,
               std::vector<EdgeId>& ids) {
  start.assign(n + 1, 0);
  for (EdgeId e = 0; e < m; ++e) {
    ++start[key(e) + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  ids.assign(m, 0);
  std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
  for (EdgeId e = 0; e < m; ++e) {
    ids[cursor[key(e)]++] = e;
  }
}

}  // namespace

Multidigraph::Multidigraph(std::size_t n, std::vector<DiEdge> edges) : n_(n), edges_(std::move(edges)) {
  const std::size_t m = edges_.size();
  build_csr(n_, m, [this](EdgeId e) { return edges_[e].tail; }, out_start_, out_ids_);
  build_csr(n_, m, [this](EdgeId e) { return edges_[e].head; }, in_start_, in_ids_);
}

Multidigraph Multidigraph::from_edge_list(std::size_t n, std::span<const DiEdge> edges) {
  require_vertices(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].tail >= n || edges[i].head >= n) {
      throw_out_of_range(i, edges[i].tail, edges[i].head, n);
    }
  }
  return Multidigraph(n, std::vector<DiEdge>(edges.begin(), edges.end()));
}

Multidigraph Multidigraph::from_count_matrix(const CountMatrix& matrix) {
  const std::size_t n = matrix.size();
  require_vertices(n);
  std::vector<DiEdge> edges;
  edges.reserve(matrix.total());
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      edges.insert(edges.end(), matrix(i, j), DiEdge{i, j});
    }
  }
  return Multidigraph(n, std::move(edges));
}

std::span<const EdgeId> Multidigraph::out_edges(VertexId v) const {
  if (v >= n_) throw OutOfRangeError("vertex " + std::to_string(v) + " out of range");
  return std::span<const EdgeId>(out_ids_).subspan(out_start_[v], out_start_[v + 1] - out_start_[v]);
}

std::span<const EdgeId> Multidigraph::in_edges(VertexId v) const {
  if (v >= n_) throw OutOfRangeError("vertex " + std::to_string(v) + " out of range");
  return std::span<const EdgeId>(in_ids_).subspan(in_start_[v], in_start_[v + 1] - in_start_[v]);
}

Multidigraph Multidigraph::with_edges_appended(std::span<const DiEdge> extra) const {
  std::vector<DiEdge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return from_edge_list(n_, all);
}

MultiGraph MultiGraph::from_edge_list(std::size_t n, std::span<const UEdge> edges) {
  require_vertices(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u >= n || edges[i].v >= n) {
      throw_out_of_range(i, edges[i].u, edges[i].v, n);
    }
  }
  return MultiGraph(n, std::vector<UEdge>(edges.begin(), edges.end()));
}

bool MultiGraph::has_parallel_edges() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges_) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return true;
  }
  return false;
}

bool MultiGraph::is_connected() const {
  std::vector<VertexId> parent(n_);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&parent](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n_;
  for (const auto& e : edges_) {
    const VertexId a = find(e.u);
    const VertexId b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

DegreeProfile degree_profile(const Multidigraph& d) {
  DegreeProfile p;
  const std::size_t n = d.vertex_count();
  p.out.resize(n);
  p.in.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    p.out[v] = d.out_degree(v);
    p.in[v] = d.in_degree(v);
    p.total += p.out[v] + p.in[v];
  }
  return p;
}

std::size_t CountMatrix::row_sum(VertexId i) const {
  std::size_t s = 0;
  for (VertexId j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

std::size_t CountMatrix::column_sum(VertexId j) const {
  std::size_t s = 0;
  for (VertexId i = 0; i < n_; ++i) s += (*this)(i, j);
  return s;
}

std::size_t CountMatrix::total() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::size_t{0});
}

bool CountMatrix::is_symmetric() const {
  for (VertexId i = 0; i < n_; ++i) {
    for (VertexId j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

CountMatrix count_matrix(const Multidigraph& d) {
  CountMatrix m(d.vertex_count());
  for (const auto& e : d.edges()) ++m(e.tail, e.head);
  return m;
}

std::vector<VertexId> support(const Multidigraph& d) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (!d.is_isolated(v)) out.push_back(v);
  }
  return out;
}

}  // namespace euler
