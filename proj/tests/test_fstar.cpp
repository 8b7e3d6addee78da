#include "doctest.h"
#include "euler/errors.hpp"
#include "euler/fstar.hpp"
#include "euler/graph_io.hpp"
#include "euler/testkit.hpp"

using namespace euler;

namespace {

FStarReport search(std::size_t n, std::size_t threads) {
  FStarOptions options;
  options.n = n;
  options.threads = threads;
  return fstar_search(options);
}

}  // namespace

TEST_CASE("degree bound") {
  CHECK(fstar_degree_bound(2) == 2);
  CHECK(fstar_degree_bound(3) == 9);
  CHECK(fstar_degree_bound(4) == 24);
}

TEST_CASE("f* for two vertices is the single edge") {
  const auto r = search(2, 1);
  CHECK(r.max_edges == 1);
  CHECK(r.candidates_examined == 1);
  CHECK(r.best_count == 1);
  CHECK(r.best_graph == serialize(MultiGraph::from_edge_list(2, {{0, 1}})));
}

TEST_CASE("f* for three vertices matches the independent re-enumeration") {
  const auto r = search(3, 1);
  const auto oracle = testkit::independent_fstar(3);
  CHECK(r.max_edges == 4);
  CHECK(r.best_count == oracle.best);
  CHECK(r.candidates_examined == oracle.candidates);
  CHECK(evaluate_f(parse_multigraph(r.best_graph), Convention::fixed_start_max()) == r.best_count);

  for (std::size_t threads : {2, 3, 8}) {
    const auto again = search(3, threads);
    CHECK(again.best_count == r.best_count);
    CHECK(again.best_graph == r.best_graph);
    CHECK(again.candidates_examined == r.candidates_examined);
  }
}

TEST_CASE("every exhaustive candidate is connected and within the bound") {
  for (std::size_t n : {2, 3}) {
    const auto candidates = fstar_candidates(n, SearchMode::exhaustive, 0, 0);
    CHECK(candidates.size() == testkit::independent_fstar(n).candidates);
    for (const auto& g : candidates) {
      CHECK(g.is_connected());
      CHECK(2 * g.edge_count() <= fstar_degree_bound(n));
    }
  }
}

TEST_CASE("f* argument checks") {
  CHECK_THROWS_AS((void)fstar_candidates(1, SearchMode::exhaustive, 0, 0), InvalidArgumentError);
  CHECK_THROWS_AS((void)fstar_candidates(4, SearchMode::exhaustive, 0, 0), TooLargeError);
  CHECK_THROWS_AS((void)fstar_candidates(4, SearchMode::randomized, 0, 0), InvalidArgumentError);
  CHECK(parse_search_mode("random") == SearchMode::randomized);
  CHECK_THROWS_AS((void)parse_search_mode("greedy"), InvalidArgumentError);
}

TEST_CASE("randomized search is reproducible") {
  FStarOptions options;
  options.n = 5;
  options.mode = SearchMode::randomized;
  options.seed = 99;
  options.budget = 40;
  const auto a = fstar_search(options);
  options.threads = 4;
  const auto b = fstar_search(options);
  CHECK(a.best_graph == b.best_graph);
  CHECK(a.best_count == b.best_count);
  CHECK(a.candidates_examined == 40);

  for (const auto& g : fstar_candidates(5, SearchMode::randomized, 99, 40)) {
    CHECK(g.is_connected());
    CHECK(2 * g.edge_count() <= fstar_degree_bound(5));
  }
}
