#include "euler/fstar.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include "euler/errors.hpp"
#include "euler/graph_io.hpp"
#include "euler/twoway.hpp"

namespace euler {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void enumerate_multiplicities(const std::vector<UEdge>& types, std::size_t at, std::size_t remaining,
                              std::vector<UEdge>& edges, std::size_t n, std::vector<MultiGraph>& out) {
  if (at == types.size()) {
    if (edges.empty()) return;
    auto g = MultiGraph::from_edge_list(n, edges);
    if (g.is_connected()) out.push_back(std::move(g));
    return;
  }
  const std::size_t base = edges.size();
  for (std::size_t k = 0; k <= remaining; ++k) {
    if (k > 0) edges.push_back(types[at]);
    enumerate_multiplicities(types, at + 1, remaining - k, edges, n, out);
  }
  edges.resize(base);
}

struct Best {
  BigCount count;
  std::string graph;
  bool set = false;

  void offer(BigCount c, std::string g) {
    if (!set || c > count || (c == count && g > graph)) {
      count = std::move(c);
      graph = std::move(g);
      set = true;
    }
  }
};

}  // namespace

std::string_view to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "randomized"; }

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::exhaustive;
  if (text == "randomized" || text == "random") return SearchMode::randomized;
  throw InvalidArgumentError("unknown search mode \"" + std::string(text) + "\"");
}

std::size_t fstar_degree_bound(std::size_t n) { return n * (n * (n - 1) / 2); }

std::vector<MultiGraph> fstar_candidates(std::size_t n, SearchMode mode, std::uint64_t seed, std::size_t budget) {
  if (n < 2) throw InvalidArgumentError("f* search needs n >= 2");
  const std::size_t max_edges = fstar_degree_bound(n) / 2;
  std::vector<MultiGraph> out;

  if (mode == SearchMode::exhaustive) {
    if (n > 3) throw TooLargeError("exhaustive f* search is limited to n <= 3; use randomized mode");
    std::vector<UEdge> types;
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i; j < n; ++j) types.push_back({i, j});
    }
    std::vector<UEdge> edges;
    enumerate_multiplicities(types, 0, max_edges, edges, n, out);
    return out;
  }

  if (budget == 0) throw InvalidArgumentError("randomized f* search needs a positive budget");
  out.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) {
    FamilySpec spec;
    spec.family = Family::random;
    spec.n = n;
    spec.seed = splitmix64(seed ^ splitmix64(i));
    spec.max_edges = max_edges;
    out.push_back(generate(spec));
  }
  return out;
}

BigCount evaluate_f(const MultiGraph& g, const Convention& conv) {
  return count(double_graph(g), conv).count;
}

FStarReport fstar_search(const FStarOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const auto candidates = fstar_candidates(options.n, options.mode, options.seed, options.budget);

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, candidates.size()));
  std::atomic<std::size_t> next{0};
  std::vector<Best> local(workers);
  std::exception_ptr failure;
  std::mutex failure_guard;

  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = next++; i < candidates.size(); i = next++) {
        local[w].offer(evaluate_f(candidates[i], options.convention), serialize(candidates[i]));
      }
    } catch (...) {
      std::lock_guard lock(failure_guard);
      if (!failure) failure = std::current_exception();
      next = candidates.size();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (failure) std::rethrow_exception(failure);

  Best best;
  for (auto& b : local) {
    if (b.set) best.offer(std::move(b.count), std::move(b.graph));
  }

  FStarReport r;
  r.n = options.n;
  r.mode = options.mode;
  r.seed = options.mode == SearchMode::randomized ? options.seed : 0;
  r.budget = options.mode == SearchMode::randomized ? options.budget : 0;
  r.convention = to_string(options.convention);
  r.degree_bound = fstar_degree_bound(options.n);
  r.max_edges = r.degree_bound / 2;
  r.best_graph = best.graph;
  r.best_count = best.count;
  r.candidates_examined = candidates.size();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace euler
