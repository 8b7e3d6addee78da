#include <algorithm>
#include <random>

#include "doctest.h"
#include "euler/connectivity.hpp"
#include "euler/errors.hpp"
#include "euler/eulerian.hpp"
#include "euler/testkit.hpp"
#include "fixtures.hpp"

using namespace euler;

namespace {

bool is_closed_walk_through(const Multidigraph& d, const DicircuitWitness& w, VertexId x, VertexId y) {
  if (w.edges.empty()) return false;
  bool saw_x = false, saw_y = false;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const auto& e = d.edge(w.edges[i]);
    if (i > 0 && d.edge(w.edges[i - 1]).head != e.tail) return false;
    saw_x = saw_x || e.tail == x;
    saw_y = saw_y || e.tail == y;
  }
  return saw_x && saw_y && d.edge(w.edges.front()).tail == d.edge(w.edges.back()).head;
}

}  // namespace

TEST_CASE("weak connectivity") {
  CHECK(is_weakly_connected(fixtures::doubled(Family::post, 4)));
  CHECK_FALSE(is_weakly_connected(Multidigraph::from_edge_list(2, {{0, 0}, {1, 1}})));
  CHECK(is_weakly_connected(Multidigraph::from_edge_list(1, {})));
  // Isolated vertex breaks connectivity but not support connectivity.
  const auto padded = Multidigraph::from_edge_list(3, {{0, 1}, {1, 0}});
  CHECK_FALSE(is_weakly_connected(padded));
  CHECK(is_support_weakly_connected(padded));
}

TEST_CASE("scc examples") {
  CHECK(scc(fixtures::directed_cycle(3)).count == 1);
  const auto single = scc(Multidigraph::from_edge_list(2, {{0, 1}}));
  CHECK(single.count == 2);
  CHECK(single.component == std::vector<std::size_t>{0, 1});

  // Reachability by hand: 0 and 1 reach each other, 2 reaches nothing.
  const auto d = Multidigraph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
  const auto p = scc(d);
  CHECK(p.count == 2);
  CHECK(p.component == std::vector<std::size_t>{0, 0, 1});
  CHECK(testkit::scc_by_closure(d).component == p.component);
}

TEST_CASE("scc numbering follows smallest member") {
  const auto d = Multidigraph::from_edge_list(4, {{3, 2}, {2, 3}, {1, 0}});
  const auto p = scc(d);
  CHECK(p.count == 3);
  CHECK(p.component == std::vector<std::size_t>{0, 1, 2, 2});
}

TEST_CASE("scc agrees with transitive closure and ignores edge order") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = testkit::random_multidigraph(rng, 7, 12);
    const auto p = scc(d);
    const auto oracle = testkit::scc_by_closure(d);
    CHECK(p.count == oracle.count);
    CHECK(p.component == oracle.component);

    std::vector<DiEdge> edges(d.edges().begin(), d.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    CHECK(scc(Multidigraph::from_edge_list(d.vertex_count(), edges)).component == p.component);
  }
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(fixtures::doubled(Family::complete, 4)));
  CHECK(is_strongly_connected(fixtures::doubled(Family::asterisk, 5)));
  CHECK_FALSE(is_strongly_connected(Multidigraph::from_edge_list(2, {{0, 1}})));
  CHECK(is_strongly_connected(fixtures::directed_cycle(5)));
  CHECK(is_strongly_connected(Multidigraph::from_edge_list(1, {})));
  CHECK(is_strongly_connected(fixtures::loop_graph()));
}

TEST_CASE("common_dicircuit examples") {
  const auto c3 = fixtures::directed_cycle(3);
  const auto w = common_dicircuit(c3, 0, 2);
  REQUIRE(w.has_value());
  CHECK(w->edges == std::vector<EdgeId>{0, 1, 2});

  CHECK_FALSE(common_dicircuit(Multidigraph::from_edge_list(2, {{0, 1}}), 0, 1).has_value());

  const auto p3 = fixtures::doubled(Family::post, 3);
  const auto wp = common_dicircuit(p3, 0, 2);
  REQUIRE(wp.has_value());
  CHECK(format_vertices(p3, Trail{wp->edges}) == "0 -> 1 -> 2 -> 1 -> 0");

  CHECK_THROWS_AS((void)common_dicircuit(c3, 1, 1), InvalidArgumentError);
  CHECK_THROWS_AS((void)common_dicircuit(c3, 0, 3), OutOfRangeError);
}

TEST_CASE("strong connectivity iff every pair has a common dicircuit") {
  const auto universe = testkit::count_matrix_universe(3, 5);
  std::mt19937_64 rng(4);
  auto check = [](const Multidigraph& d) {
    bool all_pairs = true;
    for (VertexId x = 0; x < d.vertex_count(); ++x) {
      for (VertexId y = 0; y < d.vertex_count(); ++y) {
        if (x == y) continue;
        const auto w = common_dicircuit(d, x, y);
        if (w) {
          CHECK(is_closed_walk_through(d, *w, x, y));
        } else {
          all_pairs = false;
        }
      }
    }
    CHECK(is_strongly_connected(d) == all_pairs);
  };
  for (const auto& d : universe) check(d);
  // n = 4 with up to 6 edges, sampled.
  for (int trial = 0; trial < 400; ++trial) {
    auto d = testkit::random_multidigraph(rng, 4, 6);
    check(d);
  }
}

TEST_CASE("balanced graphs have no edge between strong components") {
  std::mt19937_64 rng(8);
  std::size_t connected_cases = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto d = testkit::random_balanced(rng, 7, 14);
    const auto p = scc(d);
    for (const auto& e : d.edges()) CHECK(p.component[e.tail] == p.component[e.head]);
    if (is_weakly_connected(d)) {
      ++connected_cases;
      CHECK(p.count == 1);
    }
  }
  CHECK(connected_cases > 50);
}
