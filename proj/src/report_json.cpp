#include "euler/report_json.hpp"

namespace euler {

nlohmann::ordered_json to_json(const CountReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["convention"] = to_string(r.resolved);
  j["requested_convention"] = to_string(r.requested);
  j["count"] = r.count.str();
  j["counts"] = {
      {"cyclic", r.cyclic.str()},
      {"fixed-start:" + std::to_string(r.fixed_start_vertex), r.fixed_start.str()},
      {"all-rotations", r.all_rotations.str()},
  };
  j["method"] = std::string(to_string(r.method));
  j["cross_checked"] = r.cross_checked;
  j["classification"] = r.classification;
  j["graph"] = r.graph;
  j["fingerprint"] = r.fingerprint;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const FStarReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["mode"] = std::string(to_string(r.mode));
  if (r.mode == SearchMode::randomized) {
    j["seed"] = r.seed;
    j["budget"] = r.budget;
  }
  j["convention"] = r.convention;
  j["search_space"] =
      "connected undirected multigraphs G (loops and parallel edges allowed) on vertices 0..n-1 with "
      "T(G) = 2|E(G)| <= n*C(n,2); f evaluated on the doubled multidigraph of G";
  j["degree_bound"] = r.degree_bound;
  j["max_edges"] = r.max_edges;
  j["best_count"] = r.best_count.str();
  j["best_graph"] = r.best_graph;
  j["candidates_examined"] = r.candidates_examined;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(r.spec.family));
  j["n"] = r.spec.n;
  j["graph"] = r.graph;
  j["claim"] = r.claim ? nlohmann::ordered_json(r.claim->str()) : nlohmann::ordered_json(nullptr);
  j["max_out_degree_vertex"] = r.max_vertex;
  if (r.enumerated) {
    j["enumeration"] = {
        {"cyclic", r.enum_cyclic.str()},
        {"fixed-start:max", r.enum_fixed_start_max.str()},
        {"all-rotations", r.enum_all_rotations.str()},
    };
  } else {
    j["enumeration"] = nullptr;
  }
  j["best_theorem"] = {
      {"cyclic", r.best_cyclic.str()},
      {"fixed-start:max", r.best_fixed_start_max.str()},
      {"all-rotations", r.best_all_rotations.str()},
  };
  j["methods_agree"] = r.methods_agree;
  j["claim_matches"] = {
      {"cyclic", r.claim_matches_cyclic},
      {"fixed-start:max", r.claim_matches_fixed_start_max},
      {"all-rotations", r.claim_matches_all_rotations},
  };
  return j;
}

}  // namespace euler
