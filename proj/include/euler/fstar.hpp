#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "euler/counting.hpp"
#include "euler/graph.hpp"

namespace euler {

// Search for the largest Eulerian-circuit count f over undirected
// multigraphs G on n vertices with total degree T(G) = 2|E(G)| <= n*C(n,2),
// where f(G) is evaluated on the doubled multidigraph of G. Candidates must
// be connected; loops and parallel edges are allowed.

enum class SearchMode { exhaustive, randomized };

std::string_view to_string(SearchMode m);
SearchMode parse_search_mode(std::string_view text);

struct FStarOptions {
  std::size_t n = 2;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;     // randomized only
  std::size_t budget = 0;     // randomized only: number of candidates drawn
  Convention convention = Convention::fixed_start_max();
  std::size_t threads = 1;
};

struct FStarReport {
  std::size_t n = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::string convention;
  std::size_t degree_bound = 0;   // n * C(n, 2)
  std::size_t max_edges = 0;      // floor(degree_bound / 2)
  std::string best_graph;         // serialized undirected multigraph
  BigCount best_count;
  std::size_t candidates_examined = 0;
  double elapsed_ms = 0.0;
};

/// n * C(n, 2)
std::size_t fstar_degree_bound(std::size_t n);

/// The deterministic candidate stream. Exhaustive mode lists every connected
/// multigraph within the bound as edge-type multiplicities over the pairs
/// (i, j), i <= j, in lexicographic order of the multiplicity vector; it is
/// refused for n > 3. Randomized mode draws `budget` seeded random connected
/// multigraphs, candidate i seeded from (seed, i).
std::vector<MultiGraph> fstar_candidates(std::size_t n, SearchMode mode, std::uint64_t seed, std::size_t budget);

/// f of the doubled graph under the convention.
BigCount evaluate_f(const MultiGraph& g, const Convention& conv);

/// Evaluates the candidate stream, possibly on several threads, and keeps the
/// maximum of (count, serialized graph). The result does not depend on the
/// thread count.
FStarReport fstar_search(const FStarOptions& options);

}  // namespace euler
