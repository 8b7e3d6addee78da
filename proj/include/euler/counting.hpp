#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "euler/graph.hpp"
#include "euler/twoway.hpp"

namespace euler {

/// Exact nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

/// What makes two Eulerian circuits "distinct".
///
///   cyclic           rotation classes of the cyclic edge sequence
///   fixed_start(v)   closed trails that begin and end at v
///   fixed_start_max  fixed_start at the vertex of largest out-degree
///                    (smallest id on ties); resolved per graph
///   all_rotations    every rotation is its own linear sequence
///
/// For a circuit-Eulerian graph: fixed_start(v) = cyclic * tau(v) and
/// all_rotations = cyclic * m.
enum class ConventionKind { cyclic, fixed_start, fixed_start_max, all_rotations };

struct Convention {
  ConventionKind kind = ConventionKind::cyclic;
  VertexId start = 0;  // only meaningful for fixed_start

  static Convention cyclic() { return {ConventionKind::cyclic, 0}; }
  static Convention fixed_start(VertexId v) { return {ConventionKind::fixed_start, v}; }
  static Convention fixed_start_max() { return {ConventionKind::fixed_start_max, 0}; }
  static Convention all_rotations() { return {ConventionKind::all_rotations, 0}; }

  friend bool operator==(const Convention&, const Convention&) = default;
};

/// "cyclic", "fixed-start:<v>", "fixed-start:max", "all-rotations"
std::string to_string(const Convention& c);
/// Inverse of to_string. Throws InvalidArgumentError.
Convention parse_convention(std::string_view text);

/// Largest out-degree, smallest id on ties.
VertexId max_out_degree_vertex(const Multidigraph& d);
/// Replaces fixed_start_max by fixed_start at the chosen vertex. Throws
/// OutOfRangeError when a fixed start vertex is not in the graph.
Convention resolve(const Convention& c, const Multidigraph& d);

inline constexpr std::size_t kDefaultEnumerationLimit = 14;

/// Exhaustive backtracking over edge choices. Zero when the graph has no
/// Eulerian circuit (including the edgeless graph). Throws TooLargeError when
/// m > limit.
BigCount enumerate_circuits(const Multidigraph& d, const Convention& conv,
                            std::size_t limit = kDefaultEnumerationLimit);

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. The empty matrix has determinant 1.
BigCount determinant(std::vector<std::vector<BigCount>> matrix);

/// Spanning arborescences with every edge directed toward `root`, via the
/// matrix-tree theorem on the out-degree Laplacian. Loops are ignored.
BigCount arborescence_count(const Multidigraph& d, VertexId root);

BigCount factorial(std::size_t k);

/// BEST product evaluated at a given root of the non-isolated subgraph:
/// arborescences(root) * prod over non-isolated v of (tau(v) - 1)!.
/// Throws NotCircuitEulerianError, and InvalidArgumentError for an
/// isolated root.
BigCount best_count_at_root(const Multidigraph& d, VertexId root);

/// Cyclic Eulerian-circuit count by the BEST theorem, rooted at the smallest
/// non-isolated vertex.
BigCount count_best(const Multidigraph& d);

enum class CountMethod { none, enumeration, best_theorem };
std::string_view to_string(CountMethod m);

struct CountReport {
  Convention requested;
  Convention resolved;
  BigCount count;  // under `resolved`

  BigCount cyclic;
  VertexId fixed_start_vertex = 0;
  BigCount fixed_start;
  BigCount all_rotations;

  CountMethod method = CountMethod::none;
  bool cross_checked = false;  // enumeration and BEST both ran and agreed
  std::string classification;
  std::string graph;  // serialized text
  std::string fingerprint;
  double elapsed_ms = 0.0;
};

inline constexpr std::size_t kEnumerateUpTo = 12;
inline constexpr std::size_t kCrossCheckUpTo = 10;

/// Enumeration for m <= 12, BEST above; both (asserted equal) for m <= 10.
/// Non-Eulerian graphs report zero under every convention.
CountReport count(const Multidigraph& d, const Convention& conv);

/// The closed forms quoted for the doubled families at unit multiplicity:
/// post 2, asterisk (n-1)!, circuit 2n, complete (n-1)! n^(n-2). These are
/// claims to be checked, not oracles. Absent for other families or when any
/// multiplicity differs from 1.
std::optional<BigCount> closed_form(const FamilySpec& spec);

/// Side-by-side comparison of a closed-form claim with computed counts of
/// the doubled family graph.
struct ClaimReport {
  FamilySpec spec;
  std::string graph;  // serialized doubled graph
  std::optional<BigCount> claim;
  VertexId max_vertex = 0;

  bool enumerated = false;  // false when m exceeds the enumeration limit
  BigCount enum_cyclic;
  BigCount enum_fixed_start_max;
  BigCount enum_all_rotations;

  BigCount best_cyclic;
  BigCount best_fixed_start_max;
  BigCount best_all_rotations;

  bool methods_agree = false;  // enumeration cyclic == BEST cyclic
  bool claim_matches_cyclic = false;
  bool claim_matches_fixed_start_max = false;
  bool claim_matches_all_rotations = false;
};

ClaimReport check_claim(const FamilySpec& spec, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace euler
