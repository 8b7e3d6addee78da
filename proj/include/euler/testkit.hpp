#pragma once

// Brute-force oracles and random instance generators used by the test
// suites, the acceptance runner and `euler selftest`. Nothing here calls the
// classification, extraction or counting code it is meant to check.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "euler/connectivity.hpp"
#include "euler/counting.hpp"
#include "euler/graph.hpp"

namespace euler::testkit {

/// One graph per count matrix with 1 <= n <= max_n and 1 <= m <= max_m.
std::vector<Multidigraph> count_matrix_universe(std::size_t max_n, std::size_t max_m);

struct TrailSearch {
  bool has_closed = false;
  bool has_open = false;
  /// (first vertex, last vertex) of every open all-edges trail found.
  std::set<std::pair<VertexId, VertexId>> open_endpoints;
};

/// Exhaustive search over every trail that uses all edges, from every start.
TrailSearch brute_force_trails(const Multidigraph& d);

/// SCCs from the reflexive-transitive closure (Floyd-Warshall), numbered by
/// smallest member.
SccPartition scc_by_closure(const Multidigraph& d);

/// Tries every choice of one non-loop out-edge per non-root vertex.
BigCount brute_arborescences(const Multidigraph& d, VertexId root);

/// Closed all-edge trails from `start`, counted over vertex sequences of the
/// count matrix and scaled by prod kappa(i,j)! for the parallel-edge labels.
BigCount closed_trails_by_transitions(const CountMatrix& m, VertexId start);

/// Vertex of largest row sum, smallest id on ties.
VertexId max_row_vertex(const CountMatrix& m);

/// Union of random closed walks glued at shared vertices; n in [1, max_n],
/// 1 <= m <= max_m, edge order shuffled. Always circuit-Eulerian.
Multidigraph random_circuit_eulerian(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m);

/// Union of random closed walks anywhere; balanced but maybe disconnected.
Multidigraph random_balanced(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m);

/// Uniformly random endpoints; no structure.
Multidigraph random_multidigraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m);

/// Connected undirected multigraph with n in [1, max_n] and m <= max_m.
MultiGraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m);

struct FStarOracle {
  BigCount best;
  std::size_t candidates = 0;
};

/// Re-derives the exhaustive f* maximum without the library search: lists
/// nondecreasing sequences of edge types, checks connectivity by its own
/// traversal, doubles through the count matrix, and counts closed trails at
/// the max-out-degree vertex by transitions.
FStarOracle independent_fstar(std::size_t n);

}  // namespace euler::testkit
