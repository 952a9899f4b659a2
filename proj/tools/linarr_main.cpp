#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "linarr/bounds.hpp"
#include "linarr/generate.hpp"
#include "linarr/io.hpp"
#include "linarr/oracle.hpp"
#include "linarr/search.hpp"

namespace {

using nlohmann::json;
using namespace linarr;

struct Config {
  std::string mode;
  long long k = -1;
  std::string input;
  std::string family;
  std::string params;
  std::uint64_t seed = 1;
  std::string format;
  int threads = 1;
  bool symmetry_prune = false;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

GenParams parse_params(const std::string& text) {
  GenParams out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(";,", pos);
    if (end == std::string::npos) end = text.size();
    std::string item = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw BadParams("expected key=value in --params, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    std::string val = trim(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      long long v = std::stoll(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      out[key] = v;
    } catch (const std::exception&) {
      throw BadParams("parameter '" + key + "' needs an integer value, got '" +
                      val + "'");
    }
  }
  return out;
}

Graph load_graph(const Config& c, double* parse_ms) {
  const bool has_input = !c.input.empty();
  const bool has_family = !c.family.empty();
  if (has_input == has_family)
    throw BadParameters("exactly one of --input and --family must be given");
  auto t0 = std::chrono::steady_clock::now();
  Graph g = has_input
                ? (c.input == "-" ? parse_graph(std::cin)
                                  : parse_graph_file(c.input))
                : generate_instance(c.family, parse_params(c.params), c.seed);
  *parse_ms = ms_since(t0);
  return g;
}

json positions_json(const Arrangement& a) {
  json arr = json::array();
  for (Vertex v = 1; v <= a.size(); ++v) arr.push_back(a.position_of(v));
  return arr;
}

void require_k(const Config& c) {
  if (c.k < 0)
    throw BadParameters("--k is required (and must be nonnegative) for mode '" +
                        c.mode + "'");
}

bool want_json(const Config& c, const char* fallback) {
  std::string f = c.format.empty() ? fallback : c.format;
  if (f == "json") return true;
  if (f == "text") return false;
  throw BadParameters("format '" + f + "' is not available in mode '" + c.mode +
                      "'");
}

int run_decide(const Config& c) {
  require_k(c);
  double parse_ms = 0;
  Graph g = load_graph(c, &parse_ms);
  SolveOptions opts;
  opts.threads = c.threads;
  opts.symmetry_prune = c.symmetry_prune;
  SolveReport rep = solve(g, c.k, opts);

  if (want_json(c, "json")) {
    json out;
    out["decision"] = rep.decision ? "yes" : "no";
    out["k"] = rep.k;
    out["ola_plus"] =
        rep.net_cost_opt ? json(*rep.net_cost_opt) : json(nullptr);
    out["arrangement"] =
        rep.arrangement ? positions_json(*rep.arrangement) : json(nullptr);
    json stats = json::array();
    for (const ComponentKernelStats& s : rep.kernel_stats)
      stats.push_back({{"component", s.component},
                       {"kernel_n", s.kernel_n},
                       {"kernel_m", s.kernel_m},
                       {"suppressed", s.suppressed}});
    out["kernel_stats"] = stats;
    out["timings_ms"] = {{"parse", parse_ms},
                         {"components", rep.timings.components_ms},
                         {"kernelize", rep.timings.kernelize_ms},
                         {"search", rep.timings.search_ms},
                         {"lift", rep.timings.lift_ms}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "decision: " << (rep.decision ? "yes" : "no") << '\n';
    std::cout << "k: " << rep.k << '\n';
    if (rep.net_cost_opt) std::cout << "ola_plus: " << *rep.net_cost_opt << '\n';
    if (rep.arrangement) {
      std::cout << "arrangement:";
      for (Vertex v = 1; v <= rep.arrangement->size(); ++v)
        std::cout << ' ' << rep.arrangement->position_of(v);
      std::cout << '\n';
    }
    std::cout << "path_components: " << rep.path_components << '\n';
    for (const ComponentKernelStats& s : rep.kernel_stats)
      std::cout << "kernel[" << s.component << "]: n=" << s.kernel_n
                << " m=" << s.kernel_m << " suppressed=" << s.suppressed
                << '\n';
    std::cout << "timings_ms: parse=" << parse_ms
              << " components=" << rep.timings.components_ms
              << " kernelize=" << rep.timings.kernelize_ms
              << " search=" << rep.timings.search_ms
              << " lift=" << rep.timings.lift_ms << '\n';
  }
  return rep.decision ? 0 : 1;
}

int run_kernel(const Config& c) {
  require_k(c);
  double parse_ms = 0;
  Graph g = load_graph(c, &parse_ms);
  SuppressionPlan plan = suppressible_sequence(g, c.k);
  KernelResult kres = suppress_all(g, plan);
  const bool accepted = kernel_gate(kres.kernel, c.k) == KernelGate::Accept;

  if (want_json(c, "json")) {
    json out;
    out["k"] = c.k;
    out["gate"] = accepted ? "accept" : "reject";
    json kernel;
    kernel["n"] = kres.kernel.vertex_count();
    kernel["m"] = kres.kernel.edge_count();
    if (accepted) {
      json edges = json::array();
      for (const Edge& e : kres.kernel.edges())
        edges.push_back({e.u, e.v});
      kernel["edges"] = edges;
    } else {
      kernel["edges"] = nullptr;
    }
    out["kernel"] = kernel;
    out["record"] = {{"original_n", kres.record.original_n},
                     {"steps", kres.record.steps.size()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "gate: " << (accepted ? "accept" : "reject") << '\n';
    std::cout << "kernel: n=" << kres.kernel.vertex_count()
              << " m=" << kres.kernel.edge_count() << '\n';
    std::cout << "suppressed: " << kres.record.steps.size() << " of "
              << kres.record.original_n << '\n';
    if (accepted)
      for (const Edge& e : kres.kernel.edges())
        std::cout << e.u << ' ' << e.v << '\n';
  }
  return accepted ? 0 : 1;
}

int run_oracle(const Config& c) {
  double parse_ms = 0;
  Graph g = load_graph(c, &parse_ms);
  OracleResult r = exact_ola_dp(g);
  if (want_json(c, "json")) {
    json out;
    out["ola"] = r.ola;
    out["ola_plus"] = r.ola_plus;
    out["arrangement"] = positions_json(r.witness);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "ola: " << r.ola << '\n';
    std::cout << "ola_plus: " << r.ola_plus << '\n';
    std::cout << "arrangement:";
    for (Vertex v = 1; v <= r.witness.size(); ++v)
      std::cout << ' ' << r.witness.position_of(v);
    std::cout << '\n';
  }
  return 0;
}

int run_count(const Config& c) {
  BoundSweep sw;
  sw.seed = c.seed;
  GenParams params = parse_params(c.params);
  for (const auto& [key, value] : params) {
    if (key == "path_n_min") sw.path_n_min = static_cast<Vertex>(value);
    else if (key == "path_n_max") sw.path_n_max = static_cast<Vertex>(value);
    else if (key == "path_k_max") sw.path_k_max = value;
    else if (key == "path_j_min") sw.path_j_min = static_cast<Vertex>(value);
    else if (key == "path_j_slack") sw.path_j_slack = static_cast<Vertex>(value);
    else if (key == "tree_n_min") sw.tree_n_min = static_cast<Vertex>(value);
    else if (key == "tree_n_max") sw.tree_n_max = static_cast<Vertex>(value);
    else if (key == "tree_k_max") sw.tree_k_max = value;
    else if (key == "tree_i_max") sw.tree_i_max = static_cast<int>(value);
    else if (key == "exhaustive_tree_n_max")
      sw.exhaustive_tree_n_max = static_cast<Vertex>(value);
    else if (key == "tree_samples") sw.tree_samples = static_cast<int>(value);
    else throw BadParams("unknown sweep parameter '" + key + "'");
  }
  std::vector<CountReport> reports = verify_bounds(sw);
  std::string f = c.format.empty() ? "csv" : c.format;
  if (f == "csv") {
    std::cout << bounds_csv(reports);
  } else if (f == "json") {
    json out = json::array();
    for (const CountReport& r : reports)
      out.push_back({{"family", r.family},
                     {"n", r.n},
                     {"k", r.k},
                     {"j_or_i", r.j_or_i},
                     {"exact_count", r.exact_count},
                     {"bound", r.bound},
                     {"holds", r.holds},
                     {"vacuous", r.vacuous}});
    std::cout << out.dump(2) << '\n';
  } else {
    throw BadParameters("format '" + f + "' is not available in mode 'count'");
  }
  bool all_hold = true;
  for (const CountReport& r : reports) all_hold = all_hold && r.holds;
  return all_hold ? 0 : 1;
}

int run_bench(const Config& c) {
  if (c.family.empty()) throw BadParameters("--family is required for bench");
  GenParams params = parse_params(c.params);
  if (!params.count("k_min") || !params.count("k_max"))
    require_k(c);  // --k backs any missing end of the budget range
  auto take = [&](const char* key, long long fallback) {
    auto it = params.find(key);
    long long v = it == params.end() ? fallback : it->second;
    if (it != params.end()) params.erase(it);
    return v;
  };
  const long long n_min = take("n_min", 1000);
  const long long n_max = take("n_max", 100000);
  const long long factor = take("factor", 10);
  const long long k_min = take("k_min", c.k);
  const long long k_max = take("k_max", c.k);
  if (n_min < 1 || n_max < n_min || factor < 2)
    throw BadParams("bench needs 1 <= n_min <= n_max and factor >= 2");
  if (k_min < 0 || k_max < k_min) throw BadParams("bench needs 0 <= k_min <= k_max");

  json rows = json::array();
  const bool as_json = want_json(c, "text");
  if (!as_json)
    std::cout << "n\tm\tk\tdecision\tgenerate_ms\tcomponents_ms\tkernelize_ms"
                 "\tsearch_ms\tlift_ms\ttotal_ms\n";
  for (long long n = n_min; n <= n_max; n *= factor) {
    GenParams p = params;
    p["n"] = n;
    auto tg = std::chrono::steady_clock::now();
    Graph g = generate_instance(c.family, p, c.seed);
    double generate_ms = ms_since(tg);
    for (long long k = k_min; k <= k_max; ++k) {
      SolveOptions opts;
      opts.threads = c.threads;
      opts.symmetry_prune = c.symmetry_prune;
      auto ts = std::chrono::steady_clock::now();
      SolveReport rep = solve(g, k, opts);
      double total_ms = ms_since(ts);
      if (as_json) {
        rows.push_back({{"n", n},
                        {"m", g.edge_count()},
                        {"k", k},
                        {"decision", rep.decision ? "yes" : "no"},
                        {"generate_ms", generate_ms},
                        {"components_ms", rep.timings.components_ms},
                        {"kernelize_ms", rep.timings.kernelize_ms},
                        {"search_ms", rep.timings.search_ms},
                        {"lift_ms", rep.timings.lift_ms},
                        {"total_ms", total_ms}});
      } else {
        std::cout << n << '\t' << g.edge_count() << '\t' << k << '\t'
                  << (rep.decision ? "yes" : "no") << '\t' << generate_ms
                  << '\t' << rep.timings.components_ms << '\t'
                  << rep.timings.kernelize_ms << '\t' << rep.timings.search_ms
                  << '\t' << rep.timings.lift_ms << '\t' << total_ms << '\n';
      }
    }
  }
  if (as_json) std::cout << rows.dump(2) << '\n';
  return 0;
}

int run_generate(const Config& c) {
  if (c.family.empty()) throw BadParameters("--family is required for generate");
  Graph g = generate_instance(c.family, parse_params(c.params), c.seed);
  std::string f = c.format.empty() ? "text" : c.format;
  if (f == "text") {
    std::cout << format_graph(g, GraphFormat::EdgeList);
  } else if (f == "dimacs") {
    std::cout << format_graph(g, GraphFormat::Dimacs);
  } else if (f == "json") {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json out = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
    std::cout << out.dump(2) << '\n';
  } else {
    throw BadParameters("format '" + f + "' is not available in mode 'generate'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "linarr: decide whether a graph has a linear arrangement of cost at "
      "most |E| + k, and related tools"};
  Config c;
  app.add_option("--mode", c.mode, "decide|kernel|oracle|count|bench|generate")
      ->required();
  app.add_option("--k", c.k, "net cost budget");
  app.add_option("--input", c.input, "graph file, '-' for stdin");
  app.add_option("--family", c.family,
                 "generator family (path, cycle, clique, star, caterpillar, "
                 "random_tree, tree_plus_chords, two_cliques_bridged)");
  app.add_option("--params", c.params, "parameters as 'key=value;key=value'");
  app.add_option("--seed", c.seed, "generator seed");
  app.add_option("--format", c.format,
                 "json|text (count: csv|json, generate: text|dimacs|json)");
  app.add_option("--threads", c.threads, "worker threads for solve");
  app.add_flag("--symmetry-prune", c.symmetry_prune,
               "search only one of each mirror pair of arrangements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c.mode == "decide") return run_decide(c);
    if (c.mode == "kernel") return run_kernel(c);
    if (c.mode == "oracle") return run_oracle(c);
    if (c.mode == "count") return run_count(c);
    if (c.mode == "bench") return run_bench(c);
    if (c.mode == "generate") return run_generate(c);
    throw BadParameters("unknown mode '" + c.mode + "'");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
