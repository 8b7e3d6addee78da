#include "euler/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "euler/errors.hpp"

namespace euler {
namespace {

struct RawGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_lines;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::size_t> to_count(std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

RawGraph read_raw(std::string_view text) {
  RawGraph raw;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError(line_no, "expected \"n <count>\"");
      }
      const auto n = to_count(tokens[1]);
      if (!n || *n == 0) throw ParseError(line_no, "vertex count must be a positive integer");
      raw.n = *n;
      have_header = true;
      continue;
    }

    if (tokens.size() != 3 || tokens[0] != "e") {
      throw ParseError(line_no, "expected \"e <tail> <head>\"");
    }
    const auto a = to_count(tokens[1]);
    const auto b = to_count(tokens[2]);
    if (!a || !b) throw ParseError(line_no, "edge endpoints must be nonnegative integers");
    if (*a >= raw.n || *b >= raw.n) {
      throw ParseError(line_no, "edge endpoint outside 0.." + std::to_string(raw.n - 1));
    }
    raw.edges.emplace_back(*a, *b);
    raw.edge_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing \"n <count>\" header");
  return raw;
}

template <typename Graph>
std::string serialize_impl(const Graph& g, auto endpoints) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    const auto [a, b] = endpoints(e);
    out << "e " << a << ' ' << b << '\n';
  }
  return out.str();
}

}  // namespace

std::string serialize(const Multidigraph& d) {
  return serialize_impl(d, [](const DiEdge& e) { return std::pair{e.tail, e.head}; });
}

std::string serialize(const MultiGraph& g) {
  return serialize_impl(g, [](const UEdge& e) { return std::pair{e.u, e.v}; });
}

Multidigraph parse_multidigraph(std::string_view text) {
  const RawGraph raw = read_raw(text);
  std::vector<DiEdge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [a, b] : raw.edges) edges.push_back({a, b});
  return Multidigraph::from_edge_list(raw.n, edges);
}

MultiGraph parse_multigraph(std::string_view text) {
  const RawGraph raw = read_raw(text);
  std::vector<UEdge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [a, b] : raw.edges) edges.push_back({a, b});
  return MultiGraph::from_edge_list(raw.n, edges);
}

std::string to_dot(const Multidigraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (VertexId v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    out << "  " << d.edge(e).tail << " -> " << d.edge(e).head << " [label=\"e" << e << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"e" << e << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string fingerprint(const Multidigraph& d) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : serialize(d)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace euler
