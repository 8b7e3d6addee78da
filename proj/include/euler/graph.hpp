#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace euler {

/// Vertices are the dense range 0..n-1.
using VertexId = std::size_t;
/// Edges are the dense range 0..m-1 in insertion order. Parallel edges get
/// distinct ids.
using EdgeId = std::size_t;

struct DiEdge {
  VertexId tail;
  VertexId head;

  bool is_loop() const noexcept { return tail == head; }
  friend bool operator==(const DiEdge&, const DiEdge&) = default;
};

/// Unordered edge of an undirected multigraph. Stored as given; {u,v} and
/// {v,u} denote the same footprint.
struct UEdge {
  VertexId u;
  VertexId v;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const UEdge&, const UEdge&) = default;
};

class CountMatrix;

/// Finite directed multigraph with identified edges. Parallel edges and
/// loops are ordinary edges. Immutable once built.
class Multidigraph {
 public:
  /// Throws InvalidArgumentError if n == 0 and OutOfRangeError naming the
  /// first edge with an endpoint >= n.
  static Multidigraph from_edge_list(std::size_t n, std::span<const DiEdge> edges);
  static Multidigraph from_edge_list(std::size_t n, std::initializer_list<DiEdge> edges) {
    return from_edge_list(n, std::span<const DiEdge>(edges.begin(), edges.size()));
  }
  /// Edges are emitted row-major: all 0->0 copies, then 0->1, ...
  static Multidigraph from_count_matrix(const CountMatrix& matrix);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const DiEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const DiEdge> edges() const noexcept { return edges_; }

  /// Edges leaving / entering v, in ascending EdgeId order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;

  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_edges(v).size(); }
  bool is_isolated(VertexId v) const { return out_degree(v) + in_degree(v) == 0; }

  /// A new graph holding these edges followed by `extra` (fresh ids m, m+1, ...).
  Multidigraph with_edges_appended(std::span<const DiEdge> extra) const;

  friend bool operator==(const Multidigraph& a, const Multidigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Multidigraph(std::size_t n, std::vector<DiEdge> edges);

  std::size_t n_ = 1;
  std::vector<DiEdge> edges_;
  // CSR layout: out_ids_[out_start_[v] .. out_start_[v+1]) are v's out-edges.
  std::vector<std::size_t> out_start_;
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_start_;
  std::vector<EdgeId> in_ids_;
};

/// Finite undirected multigraph; loops and parallel edges allowed.
class MultiGraph {
 public:
  static MultiGraph from_edge_list(std::size_t n, std::span<const UEdge> edges);
  static MultiGraph from_edge_list(std::size_t n, std::initializer_list<UEdge> edges) {
    return from_edge_list(n, std::span<const UEdge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const UEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const UEdge> edges() const noexcept { return edges_; }

  /// True when two edges share the same unordered endpoint pair.
  bool has_parallel_edges() const;
  /// Undirected connectivity over all vertices; isolated vertices break it.
  bool is_connected() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  MultiGraph(std::size_t n, std::vector<UEdge> edges) : n_(n), edges_(std::move(edges)) {}

  std::size_t n_ = 1;
  std::vector<UEdge> edges_;
};

struct DegreeProfile {
  std::vector<std::size_t> out;  // tau
  std::vector<std::size_t> in;   // eta
  std::size_t total = 0;         // T = sum of out + in = 2m

  std::size_t degree(VertexId v) const { return out.at(v) + in.at(v); }
  bool balanced(VertexId v) const { return out.at(v) == in.at(v); }
};

/// A loop adds one to both the out- and in-degree of its vertex.
DegreeProfile degree_profile(const Multidigraph& d);

/// n x n matrix of parallel-edge multiplicities: (i, j) counts edges i->j.
class CountMatrix {
 public:
  explicit CountMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t& operator()(VertexId i, VertexId j) { return cells_.at(i * n_ + j); }
  std::size_t operator()(VertexId i, VertexId j) const { return cells_.at(i * n_ + j); }

  std::size_t row_sum(VertexId i) const;
  std::size_t column_sum(VertexId j) const;
  std::size_t total() const;
  bool is_symmetric() const;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> cells_;
};

CountMatrix count_matrix(const Multidigraph& d);

/// Vertices with at least one incident edge.
std::vector<VertexId> support(const Multidigraph& d);

}  // namespace euler
