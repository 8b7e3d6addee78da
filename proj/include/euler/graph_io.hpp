#pragma once

#include <string>
#include <string_view>

#include "euler/graph.hpp"

namespace euler {

// Line-oriented text format:
//
//   # comment
//   n <vertex count>
//   e <tail> <head>
//   ...
//
// Blank lines and lines whose first non-blank character is '#' are skipped.
// Edge order in the text defines EdgeId. Undirected graphs use the same
// layout with "e <u> <v>" naming an unordered pair.

std::string serialize(const Multidigraph& d);
std::string serialize(const MultiGraph& g);

/// Throws ParseError carrying the 1-based line number of the offending line.
Multidigraph parse_multidigraph(std::string_view text);
MultiGraph parse_multigraph(std::string_view text);

/// Graphviz export, one statement per edge in EdgeId order.
std::string to_dot(const Multidigraph& d);
std::string to_dot(const MultiGraph& g);

/// 64-bit FNV-1a of serialize(d), as 16 hex digits.
std::string fingerprint(const Multidigraph& d);

}  // namespace euler
