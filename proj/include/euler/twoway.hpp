#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "euler/graph.hpp"

namespace euler {

/// Multiplicity per simple edge, keyed by (min endpoint, max endpoint).
using MultiplicityMap = std::map<std::pair<VertexId, VertexId>, std::size_t>;

enum class Family { post, asterisk, circuit, complete, tree, random };

std::string_view to_string(Family f);
/// Throws InvalidArgumentError for an unknown name.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::post;
  std::size_t n = 2;
  /// Required by tree and random.
  std::optional<std::uint64_t> seed;
  /// Upper bound on edge count for random; defaults to 2n.
  std::optional<std::size_t> max_edges;
  /// Applied after the base graph is built; must cover every edge.
  std::optional<MultiplicityMap> multiplicity;
};

/// Each edge {x, y} with id k becomes diedges 2k: x -> y and 2k+1: y -> x.
/// A loop becomes two loops.
Multidigraph double_graph(const MultiGraph& g);

/// Replaces every edge of a graph without parallel edges by mu(edge) copies,
/// keeping edge order. Throws InvalidArgumentError for parallel edges in g,
/// missing or zero multiplicities, and entries naming non-edges.
MultiGraph expand_multiplicity(const MultiGraph& g, const MultiplicityMap& mu);

/// Same multiplicity on every edge of g.
MultiplicityMap uniform_multiplicity(const MultiGraph& g, std::size_t mu);

/// Builds a named family:
///   post      0-1, 1-2, ..., (n-2)-(n-1)        n >= 2
///   asterisk  0-1, 0-2, ..., 0-(n-1)            n >= 2
///   circuit   post edges plus (n-1)-0           n >= 3
///   complete  all pairs i < j, lexicographic    n >= 2
///   tree      uniform labeled tree (Pruefer)    seed required
///   random    connected multigraph, m <= max    seed required
MultiGraph generate(const FamilySpec& spec);

/// Symmetric count matrix and, for every pair of distinct vertices, a chain
/// of positive entries joining them.
bool is_two_way(const Multidigraph& d);

}  // namespace euler
