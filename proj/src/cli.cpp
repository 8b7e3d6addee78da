#include "euler/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "euler/connectivity.hpp"
#include "euler/counting.hpp"
#include "euler/errors.hpp"
#include "euler/eulerian.hpp"
#include "euler/fstar.hpp"
#include "euler/graph_io.hpp"
#include "euler/report_json.hpp"
#include "euler/testkit.hpp"
#include "euler/twoway.hpp"

namespace euler {
namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct GraphInput {
  std::string input;
  bool twoway = false;
  std::string dot_path;
};

void add_graph_options(CLI::App* cmd, GraphInput& opts) {
  cmd->add_option("--input", opts.input, "Graph file (default: stdin)");
  cmd->add_flag("--double", opts.twoway, "Read an undirected graph and replace each edge by both orientations");
  cmd->add_option("--emit-dot", opts.dot_path, "Also write Graphviz DOT to this path");
}

std::string slurp(const GraphInput& opts, std::istream& in) {
  if (opts.input.empty()) return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(opts.input);
  if (!file) throw UsageError("cannot open " + opts.input);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_dot(const std::string& path, const std::string& dot) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << dot;
}

Multidigraph load_graph(const GraphInput& opts, std::istream& in) {
  const std::string text = slurp(opts, in);
  Multidigraph d = opts.twoway ? double_graph(parse_multigraph(text)) : parse_multidigraph(text);
  write_dot(opts.dot_path, to_dot(d));
  return d;
}

int run_classify(const GraphInput& opts, std::istream& in, std::ostream& out) {
  const auto d = load_graph(opts, in);
  if (d.edge_count() == 0) {
    out << to_string(EulerClassification{NotEulerian{NotEulerianReason::trivial}}) << '\n';
  } else {
    out << to_string(classify(d)) << '\n';
  }
  return kOk;
}

void print_trail(const Multidigraph& d, const Trail& t, std::ostream& out) {
  out << format_vertices(d, t) << '\n' << "edges:";
  for (const EdgeId e : t.edges) out << ' ' << e;
  out << '\n';
}

struct Selftest {
  std::ostream& out;
  bool all_ok = true;

  void report(const std::string& name, std::size_t cases, std::size_t failures) {
    out << (failures == 0 ? "ok   " : "FAIL ") << name << " (" << cases << " cases, " << failures
        << " failures)\n";
    all_ok = all_ok && failures == 0;
  }
};

int run_selftest(std::size_t max_n, std::size_t max_m, std::ostream& out) {
  Selftest st{out};
  const auto universe = testkit::count_matrix_universe(max_n, max_m);

  std::size_t circuit_fail = 0, path_fail = 0, scc_fail = 0, claim_fail = 0, zero_fail = 0, best_fail = 0;
  std::size_t eulerian_cases = 0;
  for (const auto& d : universe) {
    const auto c = classify(d);
    const auto brute = testkit::brute_force_trails(d);
    if (is_circuit_eulerian(c) != brute.has_closed) ++circuit_fail;

    const auto* path = std::get_if<PathEulerian>(&c);
    const bool path_expected = brute.has_open && !brute.has_closed;
    if ((path != nullptr) != path_expected) {
      ++path_fail;
    } else if (path != nullptr) {
      for (const auto& ends : brute.open_endpoints) {
        if (ends != std::pair{path->begin, path->end}) {
          ++path_fail;
          break;
        }
      }
    }

    const auto fast = scc(d);
    const auto slow = testkit::scc_by_closure(d);
    if (fast.component != slow.component || fast.count != slow.count) ++scc_fail;

    const auto profile = degree_profile(d);
    bool balanced = true;
    for (VertexId v = 0; v < d.vertex_count(); ++v) balanced = balanced && profile.balanced(v);
    if (balanced) {
      for (const auto& e : d.edges()) {
        if (fast.component[e.tail] != fast.component[e.head]) {
          ++claim_fail;
          break;
        }
      }
    }

    const BigCount cyclic = enumerate_circuits(d, Convention::cyclic());
    if ((cyclic == 0) == is_circuit_eulerian(c)) ++zero_fail;
    if (is_circuit_eulerian(c)) {
      ++eulerian_cases;
      if (count_best(d) != cyclic) ++best_fail;
    }
  }
  st.report("circuit verdict matches brute-force closed trail search", universe.size(), circuit_fail);
  st.report("path verdict and endpoints match brute-force open trail search", universe.size(), path_fail);
  st.report("Tarjan SCCs match transitive-closure SCCs", universe.size(), scc_fail);
  st.report("balanced graphs have no edge between SCCs", universe.size(), claim_fail);
  st.report("enumeration is zero exactly on non-circuit-Eulerian graphs", universe.size(), zero_fail);
  st.report("BEST count equals enumeration", eulerian_cases, best_fail);
  return st.all_ok ? kOk : kDomainError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eulerian circuits and paths in directed multigraphs"};
  app.require_subcommand(1);

  // generate
  std::string family_name;
  std::size_t gen_n = 0;
  std::optional<std::uint64_t> gen_seed;
  std::optional<std::size_t> gen_max_edges;
  std::size_t gen_mu = 1;
  std::string gen_dot;
  auto* generate_cmd = app.add_subcommand("generate", "Write a named undirected family in graph text format");
  generate_cmd->add_option("--family", family_name, "post | asterisk | circuit | complete | tree | random")
      ->required();
  generate_cmd->add_option("--n", gen_n, "Vertex count")->required();
  generate_cmd->add_option("--seed", gen_seed, "Seed for tree and random");
  generate_cmd->add_option("--max-edges", gen_max_edges, "Edge bound for random (default 2n)");
  generate_cmd->add_option("--mu", gen_mu, "Uniform edge multiplicity (default 1)");
  generate_cmd->add_option("--emit-dot", gen_dot, "Also write Graphviz DOT to this path");

  GraphInput classify_opts, circuit_opts, path_opts, count_opts;
  auto* classify_cmd = app.add_subcommand("classify", "Print the Eulerian verdict");
  add_graph_options(classify_cmd, classify_opts);
  auto* circuit_cmd = app.add_subcommand("circuit", "Print an Eulerian circuit");
  add_graph_options(circuit_cmd, circuit_opts);
  auto* path_cmd = app.add_subcommand("path", "Print an Eulerian path");
  add_graph_options(path_cmd, path_opts);

  std::string count_convention = "cyclic";
  bool count_pretty = false;
  bool count_timing = false;
  auto* count_cmd = app.add_subcommand("count", "Count Eulerian circuits; prints a JSON report");
  add_graph_options(count_cmd, count_opts);
  count_cmd->add_option("--convention", count_convention,
                        "cyclic | fixed-start:<v> | fixed-start:max | all-rotations");
  count_cmd->add_flag("--pretty", count_pretty, "Indent the JSON");
  count_cmd->add_flag("--timing", count_timing, "Include elapsed_ms");

  std::size_t fs_n = 0;
  std::string fs_mode = "exhaustive";
  std::uint64_t fs_seed = 0;
  std::size_t fs_budget = 0;
  std::string fs_convention = "fixed-start:max";
  std::size_t fs_threads = 1;
  bool fs_pretty = false;
  bool fs_timing = false;
  std::string fs_dot;
  auto* fstar_cmd = app.add_subcommand("fstar", "Search for the largest circuit count f*(n)");
  fstar_cmd->add_option("--n", fs_n, "Vertex count")->required();
  fstar_cmd->add_option("--mode", fs_mode, "exhaustive | randomized");
  fstar_cmd->add_option("--seed", fs_seed, "Seed for randomized mode");
  fstar_cmd->add_option("--budget", fs_budget, "Candidates drawn in randomized mode");
  fstar_cmd->add_option("--convention", fs_convention, "Counting convention");
  fstar_cmd->add_option("--threads", fs_threads, "Worker threads");
  fstar_cmd->add_flag("--pretty", fs_pretty, "Indent the JSON");
  fstar_cmd->add_flag("--timing", fs_timing, "Include elapsed_ms");
  fstar_cmd->add_option("--emit-dot", fs_dot, "Write the best graph (doubled) as DOT");

  std::size_t st_n = 3;
  std::size_t st_m = 5;
  auto* selftest_cmd = app.add_subcommand("selftest", "Check the library against brute-force oracles");
  selftest_cmd->add_option("--max-n", st_n, "Largest vertex count in the universe");
  selftest_cmd->add_option("--max-m", st_m, "Largest edge count in the universe");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (generate_cmd->parsed()) {
      FamilySpec spec;
      spec.family = parse_family(family_name);
      spec.n = gen_n;
      spec.seed = gen_seed;
      spec.max_edges = gen_max_edges;
      MultiGraph g = generate(spec);
      if (gen_mu != 1) {
        g = expand_multiplicity(g, uniform_multiplicity(g, gen_mu));
      }
      out << "# generate --family " << family_name << " --n " << gen_n;
      if (gen_seed) out << " --seed " << *gen_seed;
      if (gen_max_edges) out << " --max-edges " << *gen_max_edges;
      if (gen_mu != 1) out << " --mu " << gen_mu;
      out << '\n' << serialize(g);
      write_dot(gen_dot, to_dot(g));
      return kOk;
    }
    if (classify_cmd->parsed()) return run_classify(classify_opts, in, out);
    if (circuit_cmd->parsed()) {
      const auto d = load_graph(circuit_opts, in);
      print_trail(d, find_euler_circuit(d), out);
      return kOk;
    }
    if (path_cmd->parsed()) {
      const auto d = load_graph(path_opts, in);
      print_trail(d, find_euler_path(d), out);
      return kOk;
    }
    if (count_cmd->parsed()) {
      const auto conv = parse_convention(count_convention);
      const auto d = load_graph(count_opts, in);
      out << to_json(count(d, conv), count_timing).dump(count_pretty ? 2 : -1) << '\n';
      return kOk;
    }
    if (fstar_cmd->parsed()) {
      FStarOptions options;
      options.n = fs_n;
      options.mode = parse_search_mode(fs_mode);
      options.seed = fs_seed;
      options.budget = fs_budget;
      options.convention = parse_convention(fs_convention);
      options.threads = fs_threads;
      const auto report = fstar_search(options);
      out << to_json(report, fs_timing).dump(fs_pretty ? 2 : -1) << '\n';
      if (!fs_dot.empty()) write_dot(fs_dot, to_dot(double_graph(parse_multigraph(report.best_graph))));
      return kOk;
    }
    if (selftest_cmd->parsed()) return run_selftest(st_n, st_m, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace euler
