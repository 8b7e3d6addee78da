#include "euler/twoway.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "euler/errors.hpp"

namespace euler {
namespace {

std::pair<VertexId, VertexId> key_of(const UEdge& e) { return {std::min(e.u, e.v), std::max(e.u, e.v)}; }

void require_size(const FamilySpec& spec, std::size_t minimum) {
  if (spec.n < minimum) {
    throw InvalidArgumentError(std::string(to_string(spec.family)) + " needs n >= " +
                               std::to_string(minimum) + ", got " + std::to_string(spec.n));
  }
}

std::uint64_t require_seed(const FamilySpec& spec) {
  if (!spec.seed) throw InvalidArgumentError(std::string(to_string(spec.family)) + " needs a seed");
  return *spec.seed;
}

// Uniform labeled tree on n vertices: draw a Pruefer sequence and decode it.
std::vector<UEdge> random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<UEdge> edges;
  if (n < 2) return edges;
  if (n == 2) return {UEdge{0, 1}};

  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (const VertexId c : code) ++degree[c];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (const VertexId c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return edges;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::post:
      return "post";
    case Family::asterisk:
      return "asterisk";
    case Family::circuit:
      return "circuit";
    case Family::complete:
      return "complete";
    case Family::tree:
      return "tree";
    case Family::random:
      return "random";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const Family f : {Family::post, Family::asterisk, Family::circuit, Family::complete, Family::tree,
                         Family::random}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgumentError("unknown family \"" + std::string(name) + "\"");
}

Multidigraph double_graph(const MultiGraph& g) {
  std::vector<DiEdge> edges;
  edges.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, e.v});
    edges.push_back({e.v, e.u});
  }
  return Multidigraph::from_edge_list(g.vertex_count(), edges);
}

MultiGraph expand_multiplicity(const MultiGraph& g, const MultiplicityMap& mu) {
  if (g.has_parallel_edges()) throw InvalidArgumentError("multiplicity expansion needs a graph without parallel edges");

  std::set<std::pair<VertexId, VertexId>> present;
  std::vector<UEdge> edges;
  for (const auto& e : g.edges()) {
    const auto key = key_of(e);
    present.insert(key);
    const auto it = mu.find(key);
    if (it == mu.end()) {
      throw InvalidArgumentError("no multiplicity for edge {" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + "}");
    }
    if (it->second == 0) {
      throw InvalidArgumentError("multiplicity of edge {" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + "} must be positive");
    }
    edges.insert(edges.end(), it->second, e);
  }
  for (const auto& [key, count] : mu) {
    if (!present.contains(key)) {
      throw InvalidArgumentError("multiplicity given for non-edge {" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + "}");
    }
  }
  return MultiGraph::from_edge_list(g.vertex_count(), edges);
}

MultiplicityMap uniform_multiplicity(const MultiGraph& g, std::size_t mu) {
  MultiplicityMap out;
  for (const auto& e : g.edges()) out[key_of(e)] = mu;
  return out;
}

MultiGraph generate(const FamilySpec& spec) {
  std::vector<UEdge> edges;
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::post:
      require_size(spec, 2);
      for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::asterisk:
      require_size(spec, 2);
      for (VertexId i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case Family::circuit:
      require_size(spec, 3);
      for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 1, 0});
      break;
    case Family::complete:
      require_size(spec, 2);
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
      }
      break;
    case Family::tree: {
      require_size(spec, 1);
      std::mt19937_64 rng(require_seed(spec));
      edges = random_tree(n, rng);
      break;
    }
    case Family::random: {
      require_size(spec, 1);
      std::mt19937_64 rng(require_seed(spec));
      const std::size_t bound = spec.max_edges.value_or(2 * n);
      if (bound < n - 1) {
        throw InvalidArgumentError("random graph on " + std::to_string(n) + " vertices needs max_edges >= " +
                                   std::to_string(n - 1));
      }
      edges = random_tree(n, rng);
      std::uniform_int_distribution<std::size_t> extra(0, bound - (n - 1));
      std::uniform_int_distribution<VertexId> pick(0, n - 1);
      for (std::size_t k = extra(rng); k > 0; --k) {
        const VertexId a = pick(rng);
        const VertexId b = pick(rng);
        edges.push_back({a, b});
      }
      break;
    }
  }
  auto g = MultiGraph::from_edge_list(n, edges);
  if (spec.multiplicity) g = expand_multiplicity(g, *spec.multiplicity);
  return g;
}

bool is_two_way(const Multidigraph& d) {
  const auto m = count_matrix(d);
  if (!m.is_symmetric()) return false;
  // Symmetric, so chains of positive entries reach exactly the undirected
  // component; every vertex has to be in the one containing vertex 0.
  const std::size_t n = d.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w = 0; w < n; ++w) {
      if (m(v, w) > 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

}  // namespace euler
