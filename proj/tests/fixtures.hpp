#pragma once

#include <vector>

#include "euler/graph.hpp"
#include "euler/twoway.hpp"

namespace euler::fixtures {

inline Multidigraph directed_cycle(std::size_t n) {
  std::vector<DiEdge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multidigraph::from_edge_list(n, edges);
}

inline Multidigraph loop_graph() { return Multidigraph::from_edge_list(1, {{0, 0}}); }

inline Multidigraph doubled(Family f, std::size_t n) {
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  return double_graph(generate(spec));
}

// 0->1, 1->2, 2->0, 0->2: path-Eulerian from 0 to 2.
inline Multidigraph triangle_with_chord() {
  return Multidigraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
}

// 0->1 twice, 1->0 once: path-Eulerian from 0 to 1.
inline Multidigraph double_forward() { return Multidigraph::from_edge_list(2, {{0, 1}, {0, 1}, {1, 0}}); }

}  // namespace euler::fixtures
