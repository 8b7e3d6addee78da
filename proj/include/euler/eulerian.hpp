#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "euler/errors.hpp"
#include "euler/graph.hpp"

namespace euler {

/// Sequence of edge ids. A valid trail chains head-to-tail and never repeats
/// an edge.
struct Trail {
  std::vector<EdgeId> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
  friend bool operator==(const Trail&, const Trail&) = default;
};

enum class TrailDefect { none, bad_edge_id, broken_chain, repeated_edge };

/// Checks the trail invariants against `d`.
TrailDefect check_trail(const Multidigraph& d, const Trail& t);
bool is_valid_trail(const Multidigraph& d, const Trail& t);
bool is_closed(const Multidigraph& d, const Trail& t);
/// Closed, valid, and of length m.
bool is_eulerian_circuit(const Multidigraph& d, const Trail& t);
/// Open, valid, and of length m.
bool is_eulerian_path(const Multidigraph& d, const Trail& t);

/// x_0, x_1, ..., x_k. Empty for an empty trail. Assumes a chained trail.
std::vector<VertexId> trail_vertices(const Multidigraph& d, const Trail& t);
/// "0 -> 1 -> 2 -> 0"
std::string format_vertices(const Multidigraph& d, const Trail& t);

struct CircuitEulerian {
  friend bool operator==(const CircuitEulerian&, const CircuitEulerian&) = default;
};

struct PathEulerian {
  VertexId begin;
  VertexId end;
  friend bool operator==(const PathEulerian&, const PathEulerian&) = default;
};

enum class NotEulerianReason { trivial, degree_imbalance, not_connected, not_strongly_connected };

struct NotEulerian {
  NotEulerianReason reason;
  friend bool operator==(const NotEulerian&, const NotEulerian&) = default;
};

using EulerClassification = std::variant<CircuitEulerian, PathEulerian, NotEulerian>;

std::string_view to_string(NotEulerianReason reason);
/// "CircuitEulerian", "PathEulerian b=0 e=2", "NotEulerian: degree-imbalance"
std::string to_string(const EulerClassification& c);

inline bool is_circuit_eulerian(const EulerClassification& c) {
  return std::holds_alternative<CircuitEulerian>(c);
}

/// Three-way verdict. Isolated vertices are ignored. Reasons are checked in
/// the order degree-imbalance, not-connected, not-strongly-connected.
/// Throws TrivialGraphError when the graph has no edges.
EulerClassification classify(const Multidigraph& d);

class NotCircuitEulerianError : public PreconditionError {
 public:
  explicit NotCircuitEulerianError(EulerClassification c)
      : PreconditionError("not circuit-Eulerian: " + to_string(c)), classification_(c) {}
  const EulerClassification& classification() const noexcept { return classification_; }

 private:
  EulerClassification classification_;
};

class NotPathEulerianError : public PreconditionError {
 public:
  explicit NotPathEulerianError(EulerClassification c)
      : PreconditionError("not path-Eulerian: " + to_string(c)), classification_(c) {}
  const EulerClassification& classification() const noexcept { return classification_; }

 private:
  EulerClassification classification_;
};

/// Eulerian dicircuit by repeated amalgamation: walk from the smallest
/// non-isolated vertex taking the smallest unused out-edge until stuck, then
/// splice a sub-dicircuit in at the earliest vertex that still has unused
/// out-edges. Deterministic.
Trail find_euler_circuit(const Multidigraph& d);

/// Eulerian dipath b -> ... -> e, via a virtual return edge e -> b.
Trail find_euler_path(const Multidigraph& d);

/// Result of subdividing every edge with a midpoint vertex.
struct SplitGraph {
  Multidigraph graph;
  std::size_t original_vertex_count;
  /// Original edge k (a -> b) became edges 2k (a -> n+k) and 2k+1 (n+k -> b).
  std::vector<std::pair<EdgeId, EdgeId>> halves;
};

SplitGraph split_transform(const Multidigraph& d);

/// Contracts each a -> o_k -> b pair of a split-graph trail back to edge k.
/// A closed trail starting at a midpoint is rotated by one edge first.
/// Throws MalformedTrailError when the edges do not pair up.
Trail contract_split_trail(const Trail& t, const SplitGraph& split);

/// Appends fresh edges along waypoints b, ..., e to a circuit-Eulerian graph.
/// The result is path-Eulerian from b to e.
Multidigraph add_dipath(const Multidigraph& d, std::span<const VertexId> waypoints);

/// Appends fresh edges along waypoints e, ..., b to a path-Eulerian graph
/// with endpoints (b, e). The result is circuit-Eulerian.
Multidigraph add_return_path(const Multidigraph& d, std::span<const VertexId> waypoints);

}  // namespace euler
