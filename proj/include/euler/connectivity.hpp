#pragma once

#include <optional>
#include <vector>

#include "euler/graph.hpp"

namespace euler {

struct SccPartition {
  /// component[v] is dense in 0..count-1, numbered by smallest member vertex.
  std::vector<std::size_t> component;
  std::size_t count = 0;
};

/// Closed walk x -> ... -> y -> ... -> x. Edges may repeat across the two legs.
struct DicircuitWitness {
  std::vector<EdgeId> edges;
};

/// Undirected connectivity over every vertex. Isolated vertices break it;
/// a single vertex is connected.
bool is_weakly_connected(const Multidigraph& d);

/// Same test restricted to vertices with at least one incident edge. True
/// for an edgeless graph.
bool is_support_weakly_connected(const Multidigraph& d);

/// Tarjan's algorithm; ids are then renumbered in order of smallest member.
SccPartition scc(const Multidigraph& d);

/// Every pair of distinct vertices is mutually reachable, i.e. lies on a
/// common closed walk. A single vertex is strongly connected.
bool is_strongly_connected(const Multidigraph& d);

/// Strong connectivity of the subgraph induced by non-isolated vertices.
bool is_support_strongly_connected(const Multidigraph& d);

/// Shortest dipath from `from` to `to` by BFS; ties go to the smaller EdgeId.
/// Empty when from == to, absent when `to` is unreachable.
std::optional<std::vector<EdgeId>> shortest_dipath(const Multidigraph& d, VertexId from, VertexId to);

/// Concatenation of the shortest x->y and y->x dipaths. Throws
/// InvalidArgumentError when x == y and OutOfRangeError for bad ids.
std::optional<DicircuitWitness> common_dicircuit(const Multidigraph& d, VertexId x, VertexId y);

}  // namespace euler
