#include "euler/eulerian.hpp"

#include <algorithm>
#include <list>
#include <optional>
#include <sstream>

#include "euler/connectivity.hpp"

namespace euler {

TrailDefect check_trail(const Multidigraph& d, const Trail& t) {
  std::vector<char> used(d.edge_count(), 0);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (e >= d.edge_count()) return TrailDefect::bad_edge_id;
    if (used[e]) return TrailDefect::repeated_edge;
    used[e] = 1;
    if (i > 0 && d.edge(t.edges[i - 1]).head != d.edge(e).tail) return TrailDefect::broken_chain;
  }
  return TrailDefect::none;
}

bool is_valid_trail(const Multidigraph& d, const Trail& t) {
  return check_trail(d, t) == TrailDefect::none;
}

bool is_closed(const Multidigraph& d, const Trail& t) {
  if (t.empty()) return false;
  return d.edge(t.edges.front()).tail == d.edge(t.edges.back()).head;
}

bool is_eulerian_circuit(const Multidigraph& d, const Trail& t) {
  return t.size() == d.edge_count() && is_valid_trail(d, t) && is_closed(d, t);
}

bool is_eulerian_path(const Multidigraph& d, const Trail& t) {
  return t.size() == d.edge_count() && is_valid_trail(d, t) && !is_closed(d, t);
}

std::vector<VertexId> trail_vertices(const Multidigraph& d, const Trail& t) {
  std::vector<VertexId> out;
  if (t.empty()) return out;
  out.reserve(t.size() + 1);
  out.push_back(d.edge(t.edges.front()).tail);
  for (const EdgeId e : t.edges) out.push_back(d.edge(e).head);
  return out;
}

std::string format_vertices(const Multidigraph& d, const Trail& t) {
  std::ostringstream out;
  const auto vs = trail_vertices(d, t);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out << " -> ";
    out << vs[i];
  }
  return out.str();
}

std::string_view to_string(NotEulerianReason reason) {
  switch (reason) {
    case NotEulerianReason::trivial:
      return "trivial";
    case NotEulerianReason::degree_imbalance:
      return "degree-imbalance";
    case NotEulerianReason::not_connected:
      return "not-connected";
    case NotEulerianReason::not_strongly_connected:
      return "not-strongly-connected";
  }
  return "unknown";
}

std::string to_string(const EulerClassification& c) {
  if (std::holds_alternative<CircuitEulerian>(c)) return "CircuitEulerian";
  if (const auto* p = std::get_if<PathEulerian>(&c)) {
    return "PathEulerian b=" + std::to_string(p->begin) + " e=" + std::to_string(p->end);
  }
  return "NotEulerian: " + std::string(to_string(std::get<NotEulerian>(c).reason));
}

EulerClassification classify(const Multidigraph& d) {
  if (d.edge_count() == 0) throw TrivialGraphError();

  // Surplus out-degree vertex b and surplus in-degree vertex e.
  std::optional<VertexId> begin;
  std::optional<VertexId> end;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const auto out = static_cast<long long>(d.out_degree(v));
    const auto in = static_cast<long long>(d.in_degree(v));
    if (out == in) continue;
    if (out - in == 1 && !begin) {
      begin = v;
    } else if (in - out == 1 && !end) {
      end = v;
    } else {
      return NotEulerian{NotEulerianReason::degree_imbalance};
    }
  }
  if (begin.has_value() != end.has_value()) return NotEulerian{NotEulerianReason::degree_imbalance};

  if (!is_support_weakly_connected(d)) return NotEulerian{NotEulerianReason::not_connected};

  if (!begin) {
    if (!is_support_strongly_connected(d)) return NotEulerian{NotEulerianReason::not_strongly_connected};
    return CircuitEulerian{};
  }

  const DiEdge virtual_edge{*end, *begin};
  const auto closed = d.with_edges_appended(std::span<const DiEdge>(&virtual_edge, 1));
  if (!is_support_strongly_connected(closed)) return NotEulerian{NotEulerianReason::not_strongly_connected};
  return PathEulerian{*begin, *end};
}

namespace {

// Amalgamation without re-checking the precondition.
Trail extract_circuit(const Multidigraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> cursor(n, 0);

  auto walk = [&](VertexId start) {
    std::vector<EdgeId> w;
    VertexId v = start;
    while (cursor[v] < d.out_degree(v)) {
      const EdgeId e = d.out_edges(v)[cursor[v]++];
      w.push_back(e);
      v = d.edge(e).head;
    }
    return w;
  };

  VertexId start = 0;
  while (start < n && d.is_isolated(start)) ++start;
  const auto first = walk(start);
  std::list<EdgeId> circuit(first.begin(), first.end());

  for (auto it = circuit.begin(); it != circuit.end();) {
    const VertexId v = d.edge(*it).tail;
    if (cursor[v] < d.out_degree(v)) {
      const auto sub = walk(v);
      it = circuit.insert(it, sub.begin(), sub.end());
    } else {
      ++it;
    }
  }
  return Trail{std::vector<EdgeId>(circuit.begin(), circuit.end())};
}

}  // namespace

Trail find_euler_circuit(const Multidigraph& d) {
  const auto c = classify(d);
  if (!is_circuit_eulerian(c)) throw NotCircuitEulerianError(c);
  return extract_circuit(d);
}

Trail find_euler_path(const Multidigraph& d) {
  const auto c = classify(d);
  const auto* path = std::get_if<PathEulerian>(&c);
  if (path == nullptr) throw NotPathEulerianError(c);

  const DiEdge virtual_edge{path->end, path->begin};
  const auto closed = d.with_edges_appended(std::span<const DiEdge>(&virtual_edge, 1));
  const EdgeId virtual_id = d.edge_count();
  const Trail circuit = extract_circuit(closed);

  const auto at = std::find(circuit.edges.begin(), circuit.edges.end(), virtual_id);
  Trail out;
  out.edges.reserve(d.edge_count());
  out.edges.insert(out.edges.end(), std::next(at), circuit.edges.end());
  out.edges.insert(out.edges.end(), circuit.edges.begin(), at);
  return out;
}

SplitGraph split_transform(const Multidigraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<DiEdge> edges;
  edges.reserve(2 * d.edge_count());
  std::vector<std::pair<EdgeId, EdgeId>> halves;
  halves.reserve(d.edge_count());
  for (EdgeId k = 0; k < d.edge_count(); ++k) {
    const VertexId mid = n + k;
    edges.push_back({d.edge(k).tail, mid});
    edges.push_back({mid, d.edge(k).head});
    halves.emplace_back(2 * k, 2 * k + 1);
  }
  return SplitGraph{Multidigraph::from_edge_list(n + d.edge_count(), edges), n, std::move(halves)};
}

Trail contract_split_trail(const Trail& t, const SplitGraph& split) {
  const Multidigraph& g = split.graph;
  if (!is_valid_trail(g, t)) throw MalformedTrailError("not a valid trail of the split graph");
  if (t.size() % 2 != 0) throw MalformedTrailError("split-graph trail has odd length");

  std::vector<EdgeId> edges = t.edges;
  if (!edges.empty() && g.edge(edges.front()).tail >= split.original_vertex_count) {
    if (!is_closed(g, t)) throw MalformedTrailError("open trail starts at a midpoint");
    std::rotate(edges.begin(), edges.begin() + 1, edges.end());
  }

  Trail out;
  out.edges.reserve(edges.size() / 2);
  for (std::size_t i = 0; i < edges.size(); i += 2) {
    const EdgeId into = edges[i];
    const EdgeId from = edges[i + 1];
    if (into % 2 != 0 || from != into + 1) {
      std::ostringstream msg;
      msg << "edges " << into << ", " << from << " do not pass through a common midpoint";
      throw MalformedTrailError(msg.str());
    }
    out.edges.push_back(into / 2);
  }
  return out;
}

namespace {

std::vector<DiEdge> edges_along(const Multidigraph& d, std::span<const VertexId> waypoints) {
  if (waypoints.size() < 2) throw InvalidArgumentError("a dipath needs at least two waypoints");
  for (const VertexId v : waypoints) {
    if (v >= d.vertex_count()) {
      throw OutOfRangeError("waypoint " + std::to_string(v) + " outside 0.." +
                            std::to_string(d.vertex_count() - 1));
    }
  }
  const bool touches = std::any_of(waypoints.begin(), waypoints.end(),
                                   [&](VertexId v) { return !d.is_isolated(v); });
  if (!touches) throw InvalidArgumentError("dipath does not touch any edge of the graph");

  std::vector<DiEdge> out;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) out.push_back({waypoints[i], waypoints[i + 1]});
  return out;
}

}  // namespace

Multidigraph add_dipath(const Multidigraph& d, std::span<const VertexId> waypoints) {
  if (!waypoints.empty() && waypoints.front() == waypoints.back()) {
    throw InvalidArgumentError("dipath must end at a vertex other than its beginning");
  }
  const auto c = classify(d);
  if (!is_circuit_eulerian(c)) throw NotCircuitEulerianError(c);
  return d.with_edges_appended(edges_along(d, waypoints));
}

Multidigraph add_return_path(const Multidigraph& d, std::span<const VertexId> waypoints) {
  const auto c = classify(d);
  const auto* path = std::get_if<PathEulerian>(&c);
  if (path == nullptr) throw NotPathEulerianError(c);
  if (waypoints.empty() || waypoints.front() != path->end || waypoints.back() != path->begin) {
    throw InvalidArgumentError("return path must run from e=" + std::to_string(path->end) +
                               " to b=" + std::to_string(path->begin));
  }
  return d.with_edges_appended(edges_along(d, waypoints));
}

}  // namespace euler
