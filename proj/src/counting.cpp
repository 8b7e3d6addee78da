#include "euler/counting.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "euler/errors.hpp"
#include "euler/eulerian.hpp"
#include "euler/graph_io.hpp"

namespace euler {

std::string to_string(const Convention& c) {
  switch (c.kind) {
    case ConventionKind::cyclic:
      return "cyclic";
    case ConventionKind::fixed_start:
      return "fixed-start:" + std::to_string(c.start);
    case ConventionKind::fixed_start_max:
      return "fixed-start:max";
    case ConventionKind::all_rotations:
      return "all-rotations";
  }
  return "unknown";
}

Convention parse_convention(std::string_view text) {
  if (text == "cyclic") return Convention::cyclic();
  if (text == "all-rotations") return Convention::all_rotations();
  constexpr std::string_view prefix = "fixed-start:";
  if (text.starts_with(prefix)) {
    const auto rest = text.substr(prefix.size());
    if (rest == "max") return Convention::fixed_start_max();
    VertexId v = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) {
      return Convention::fixed_start(v);
    }
  }
  throw InvalidArgumentError("unknown convention \"" + std::string(text) +
                             "\" (expected cyclic, fixed-start:<v>, fixed-start:max or all-rotations)");
}

VertexId max_out_degree_vertex(const Multidigraph& d) {
  VertexId best = 0;
  for (VertexId v = 1; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) > d.out_degree(best)) best = v;
  }
  return best;
}

Convention resolve(const Convention& c, const Multidigraph& d) {
  if (c.kind == ConventionKind::fixed_start_max) return Convention::fixed_start(max_out_degree_vertex(d));
  if (c.kind == ConventionKind::fixed_start && c.start >= d.vertex_count()) {
    throw OutOfRangeError("start vertex " + std::to_string(c.start) + " outside 0.." +
                          std::to_string(d.vertex_count() - 1));
  }
  return c;
}

namespace {

// Counts closed trails that use every edge, by plain backtracking.
class TrailCounter {
 public:
  explicit TrailCounter(const Multidigraph& d) : d_(d), used_(d.edge_count(), 0) {}

  std::uint64_t from_vertex(VertexId start) {
    target_ = start;
    found_ = 0;
    descend(start, 0);
    return found_;
  }

  // Trails whose first edge is `first`; each rotation class has exactly one.
  std::uint64_t from_edge(EdgeId first) {
    target_ = d_.edge(first).tail;
    found_ = 0;
    used_[first] = 1;
    descend(d_.edge(first).head, 1);
    used_[first] = 0;
    return found_;
  }

 private:
  void descend(VertexId at, std::size_t depth) {
    if (depth == d_.edge_count()) {
      if (at == target_) ++found_;
      return;
    }
    for (const EdgeId e : d_.out_edges(at)) {
      if (used_[e]) continue;
      used_[e] = 1;
      descend(d_.edge(e).head, depth + 1);
      used_[e] = 0;
    }
  }

  const Multidigraph& d_;
  std::vector<char> used_;
  VertexId target_ = 0;
  std::uint64_t found_ = 0;
};

// Subgraph on non-isolated vertices, with the old -> new vertex map.
std::pair<Multidigraph, std::vector<VertexId>> compress_support(const Multidigraph& d) {
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> index(d.vertex_count(), kNone);
  std::size_t next = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (!d.is_isolated(v)) index[v] = next++;
  }
  std::vector<DiEdge> edges;
  edges.reserve(d.edge_count());
  for (const auto& e : d.edges()) edges.push_back({index[e.tail], index[e.head]});
  return {Multidigraph::from_edge_list(std::max<std::size_t>(next, 1), edges), std::move(index)};
}

}  // namespace

BigCount enumerate_circuits(const Multidigraph& d, const Convention& conv, std::size_t limit) {
  if (d.edge_count() > limit) {
    throw TooLargeError("enumeration limited to " + std::to_string(limit) + " edges, graph has " +
                        std::to_string(d.edge_count()) + "; use the BEST-theorem counter");
  }
  const Convention c = resolve(conv, d);
  if (d.edge_count() == 0) return 0;

  TrailCounter counter(d);
  switch (c.kind) {
    case ConventionKind::cyclic:
      return counter.from_edge(0);
    case ConventionKind::fixed_start:
      return counter.from_vertex(c.start);
    case ConventionKind::all_rotations: {
      BigCount total = 0;
      for (VertexId v = 0; v < d.vertex_count(); ++v) total += counter.from_vertex(v);
      return total;
    }
    case ConventionKind::fixed_start_max:
      break;
  }
  throw std::logic_error("unresolved convention");
}

BigCount determinant(std::vector<std::vector<BigCount>> a) {
  const std::size_t k = a.size();
  for (const auto& row : a) {
    if (row.size() != k) throw InvalidArgumentError("determinant of a non-square matrix");
  }
  if (k == 0) return 1;

  BigCount previous = 1;
  bool negate = false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i][i] == 0) {
      std::size_t r = i + 1;
      while (r < k && a[r][i] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[i], a[r]);
      negate = !negate;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        // Exact by Sylvester's identity.
        a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / previous;
      }
      a[r][i] = 0;
    }
    previous = a[i][i];
  }
  return negate ? BigCount(-a[k - 1][k - 1]) : a[k - 1][k - 1];
}

BigCount arborescence_count(const Multidigraph& d, VertexId root) {
  const std::size_t n = d.vertex_count();
  if (root >= n) throw OutOfRangeError("root " + std::to_string(root) + " outside 0.." + std::to_string(n - 1));

  std::vector<std::vector<BigCount>> laplacian(n, std::vector<BigCount>(n, 0));
  for (const auto& e : d.edges()) {
    if (e.is_loop()) continue;
    laplacian[e.tail][e.tail] += 1;
    laplacian[e.tail][e.head] -= 1;
  }
  laplacian.erase(laplacian.begin() + static_cast<std::ptrdiff_t>(root));
  for (auto& row : laplacian) row.erase(row.begin() + static_cast<std::ptrdiff_t>(root));
  return determinant(std::move(laplacian));
}

BigCount factorial(std::size_t k) {
  static std::vector<BigCount> memo{1};
  // Called from search worker threads.
  static std::mutex guard;
  std::lock_guard lock(guard);
  while (memo.size() <= k) memo.push_back(memo.back() * memo.size());
  return memo[k];
}

BigCount best_count_at_root(const Multidigraph& d, VertexId root) {
  const auto c = classify(d);
  if (!is_circuit_eulerian(c)) throw NotCircuitEulerianError(c);
  if (root >= d.vertex_count() || d.is_isolated(root)) {
    throw InvalidArgumentError("BEST root must be a non-isolated vertex");
  }
  const auto [sub, index] = compress_support(d);
  BigCount result = arborescence_count(sub, index[root]);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) > 0) result *= factorial(d.out_degree(v) - 1);
  }
  return result;
}

BigCount count_best(const Multidigraph& d) {
  const auto c = classify(d);
  if (!is_circuit_eulerian(c)) throw NotCircuitEulerianError(c);
  VertexId root = 0;
  while (d.is_isolated(root)) ++root;
  return best_count_at_root(d, root);
}

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::none:
      return "none";
    case CountMethod::enumeration:
      return "enumeration";
    case CountMethod::best_theorem:
      return "best-theorem";
  }
  return "unknown";
}

CountReport count(const Multidigraph& d, const Convention& conv) {
  const auto started = std::chrono::steady_clock::now();
  CountReport r;
  r.requested = conv;
  r.resolved = resolve(conv, d);
  r.fixed_start_vertex =
      r.resolved.kind == ConventionKind::fixed_start ? r.resolved.start : max_out_degree_vertex(d);
  r.graph = serialize(d);
  r.fingerprint = fingerprint(d);

  const EulerClassification verdict =
      d.edge_count() == 0 ? EulerClassification{NotEulerian{NotEulerianReason::trivial}} : classify(d);
  r.classification = to_string(verdict);
  if (is_circuit_eulerian(verdict)) {
    const std::size_t m = d.edge_count();
    if (m <= kEnumerateUpTo) {
      r.method = CountMethod::enumeration;
      r.cyclic = enumerate_circuits(d, Convention::cyclic(), kEnumerateUpTo);
      if (m <= kCrossCheckUpTo) {
        const BigCount best = count_best(d);
        if (best != r.cyclic) {
          throw std::logic_error("enumeration (" + r.cyclic.str() + ") and BEST (" + best.str() +
                                 ") disagree on " + r.fingerprint);
        }
        r.cross_checked = true;
      }
    } else {
      r.method = CountMethod::best_theorem;
      r.cyclic = count_best(d);
    }
    r.fixed_start = r.cyclic * d.out_degree(r.fixed_start_vertex);
    r.all_rotations = r.cyclic * m;
  }

  switch (r.resolved.kind) {
    case ConventionKind::cyclic:
      r.count = r.cyclic;
      break;
    case ConventionKind::fixed_start:
      r.count = r.fixed_start;
      break;
    case ConventionKind::all_rotations:
      r.count = r.all_rotations;
      break;
    case ConventionKind::fixed_start_max:
      throw std::logic_error("unresolved convention");
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

std::optional<BigCount> closed_form(const FamilySpec& spec) {
  if (spec.multiplicity) {
    for (const auto& [edge, mu] : *spec.multiplicity) {
      if (mu != 1) return std::nullopt;
    }
  }
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::post:
      return BigCount(2);
    case Family::asterisk:
      return factorial(n - 1);
    case Family::circuit:
      return BigCount(2 * n);
    case Family::complete:
      return factorial(n - 1) * boost::multiprecision::pow(BigCount(n), static_cast<unsigned>(n - 2));
    case Family::tree:
    case Family::random:
      return std::nullopt;
  }
  return std::nullopt;
}

ClaimReport check_claim(const FamilySpec& spec, std::size_t limit) {
  ClaimReport r;
  r.spec = spec;
  r.claim = closed_form(spec);
  const Multidigraph d = double_graph(generate(spec));
  r.graph = serialize(d);
  r.max_vertex = max_out_degree_vertex(d);

  const std::size_t m = d.edge_count();
  const std::size_t tau = d.out_degree(r.max_vertex);
  r.best_cyclic = count_best(d);
  r.best_fixed_start_max = r.best_cyclic * tau;
  r.best_all_rotations = r.best_cyclic * m;

  if (m <= limit) {
    r.enumerated = true;
    r.enum_cyclic = enumerate_circuits(d, Convention::cyclic(), limit);
    r.enum_fixed_start_max = enumerate_circuits(d, Convention::fixed_start_max(), limit);
    r.enum_all_rotations = enumerate_circuits(d, Convention::all_rotations(), limit);
    r.methods_agree = r.enum_cyclic == r.best_cyclic;
  }

  const BigCount& cyc = r.enumerated ? r.enum_cyclic : r.best_cyclic;
  const BigCount& fsm = r.enumerated ? r.enum_fixed_start_max : r.best_fixed_start_max;
  const BigCount& all = r.enumerated ? r.enum_all_rotations : r.best_all_rotations;
  if (r.claim) {
    r.claim_matches_cyclic = *r.claim == cyc;
    r.claim_matches_fixed_start_max = *r.claim == fsm;
    r.claim_matches_all_rotations = *r.claim == all;
  }
  return r;
}

}  // namespace euler
