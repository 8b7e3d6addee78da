#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "euler/connectivity.hpp"
#include "euler/errors.hpp"
#include "euler/eulerian.hpp"
#include "euler/testkit.hpp"
#include "euler/twoway.hpp"
#include "fixtures.hpp"

using namespace euler;

namespace {

MultiGraph family(Family f, std::size_t n) {
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  return generate(spec);
}

}  // namespace

TEST_CASE("double_graph examples") {
  const auto p2 = double_graph(family(Family::post, 2));
  CHECK(p2 == Multidigraph::from_edge_list(2, {{0, 1}, {1, 0}}));

  const auto loop = double_graph(MultiGraph::from_edge_list(1, {{0, 0}}));
  CHECK(loop == Multidigraph::from_edge_list(1, {{0, 0}, {0, 0}}));

  const auto p3 = double_graph(family(Family::post, 3));
  CHECK(p3.edge_count() == 4);
  CHECK(is_circuit_eulerian(classify(p3)));
}

TEST_CASE("expand_multiplicity") {
  const auto p2 = family(Family::post, 2);
  const auto twice = expand_multiplicity(p2, uniform_multiplicity(p2, 2));
  CHECK(twice == MultiGraph::from_edge_list(2, {{0, 1}, {0, 1}}));

  const auto p3 = family(Family::post, 3);
  const MultiplicityMap mu{{{0, 1}, 1}, {{1, 2}, 3}};
  CHECK(expand_multiplicity(p3, mu).edge_count() == 4);

  CHECK_THROWS_AS((void)expand_multiplicity(p3, MultiplicityMap{{{0, 1}, 0}, {{1, 2}, 1}}), InvalidArgumentError);
  CHECK_THROWS_AS((void)expand_multiplicity(p3, MultiplicityMap{{{0, 1}, 1}}), InvalidArgumentError);
  CHECK_THROWS_AS((void)expand_multiplicity(p3, MultiplicityMap{{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}}),
                  InvalidArgumentError);
  CHECK_THROWS_AS((void)expand_multiplicity(twice, uniform_multiplicity(twice, 1)), InvalidArgumentError);
}

TEST_CASE("generate named families") {
  CHECK(family(Family::post, 4) == MultiGraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(family(Family::asterisk, 4) == MultiGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(family(Family::circuit, 4) == MultiGraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(family(Family::complete, 4).edge_count() == 6);

  // K_3 is the triangle.
  const auto k3 = family(Family::complete, 3);
  const auto c3 = family(Family::circuit, 3);
  CHECK(count_matrix(double_graph(k3)) == count_matrix(double_graph(c3)));

  CHECK_THROWS_AS((void)family(Family::post, 1), InvalidArgumentError);
  CHECK_THROWS_AS((void)family(Family::asterisk, 1), InvalidArgumentError);
  CHECK_THROWS_AS((void)family(Family::circuit, 2), InvalidArgumentError);
  CHECK_THROWS_AS((void)family(Family::complete, 1), InvalidArgumentError);
  CHECK_THROWS_AS((void)family(Family::tree, 5), InvalidArgumentError);  // no seed
}

TEST_CASE("family multiplicity is applied") {
  FamilySpec spec;
  spec.family = Family::post;
  spec.n = 3;
  spec.multiplicity = MultiplicityMap{{{0, 1}, 2}, {{1, 2}, 1}};
  CHECK(generate(spec) == MultiGraph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}}));
}

TEST_CASE("random trees are spanning trees and reproducible") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (std::size_t n : {1, 2, 3, 7, 12}) {
      FamilySpec spec{Family::tree, n, seed, std::nullopt, std::nullopt};
      const auto t = generate(spec);
      CHECK(t.edge_count() == n - 1);
      CHECK(t.is_connected());
      CHECK(generate(spec) == t);
    }
  }
}

TEST_CASE("random trees cover all labeled trees on 4 vertices") {
  // Cayley: 4^2 = 16 labeled trees.
  std::set<std::vector<std::pair<VertexId, VertexId>>> seen;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto t = generate(FamilySpec{Family::tree, 4, seed, std::nullopt, std::nullopt});
    std::vector<std::pair<VertexId, VertexId>> key;
    for (const auto& e : t.edges()) key.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(key.begin(), key.end());
    seen.insert(key);
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("random family is connected within its bound") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    FamilySpec spec{Family::random, 1 + seed % 8, seed, 16, std::nullopt};
    const auto g = generate(spec);
    CHECK(g.is_connected());
    CHECK(g.edge_count() <= 16);
    CHECK(g.edge_count() >= spec.n - 1);
    CHECK(generate(spec) == g);
  }
  CHECK_THROWS_AS((void)generate(FamilySpec{Family::random, 5, 1, 3, std::nullopt}), InvalidArgumentError);
}

TEST_CASE("is_two_way examples") {
  CHECK(is_two_way(double_graph(family(Family::complete, 4))));
  CHECK_FALSE(is_two_way(fixtures::directed_cycle(3)));
  const auto split = double_graph(MultiGraph::from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK(count_matrix(split).is_symmetric());
  CHECK_FALSE(is_two_way(split));
}

TEST_CASE("doubling properties") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    // Mix connected and arbitrary undirected graphs.
    MultiGraph g = testkit::random_connected_multigraph(rng, 7, 12);
    if (trial % 2 == 1) {
      const auto d = testkit::random_multidigraph(rng, 6, 8);
      std::vector<UEdge> edges;
      for (const auto& e : d.edges()) edges.push_back({e.tail, e.head});
      g = MultiGraph::from_edge_list(d.vertex_count(), edges);
    }
    const auto d = double_graph(g);
    const auto p = degree_profile(d);
    const auto m = count_matrix(d);
    std::size_t sum_out = 0;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      CHECK(p.out[v] == p.in[v]);
      CHECK(p.out[v] == m.row_sum(v));
      CHECK(m.row_sum(v) == m.column_sum(v));
      sum_out += p.out[v];
    }
    CHECK(sum_out == 2 * g.edge_count());
    CHECK(m.is_symmetric());
    CHECK(is_two_way(d) == g.is_connected());
    CHECK(is_two_way(d) == is_weakly_connected(d));
    if (g.is_connected() && g.edge_count() > 0) CHECK(is_circuit_eulerian(classify(d)));
  }
}
