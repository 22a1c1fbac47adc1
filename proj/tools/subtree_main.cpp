// subtree: exact subtree statistics and random-graph experiments.
//
//   subtree census <graphfile>
//   subtree prob <graphfile> [--interval K]
//   subtree pairs <graphfile> --k K
//   subtree experiment <name> [--config file] [--n ...] [--p ...] [--trials T]
//                      [--seed S] [--out path] [--format csv|json] [--threads N]
//                      [--max-exact-n 24] [--k K]
//
// Exit status: 0 success, 1 assertion failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "subtree/edge_list.hpp"
#include "subtree/exact_count.hpp"
#include "subtree/experiments.hpp"
#include "subtree/report.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kAssertion = 1;

int run_census(const std::string& path, const subtree::CountOptions& opts) {
  const auto g = subtree::read_edge_list_file(path).graph;
  std::cout << subtree::to_json(subtree::subtree_census(g, opts)) << '\n';
  return 0;
}

int run_prob(const std::string& path, const subtree::CountOptions& opts, int interval_depth) {
  const auto g = subtree::read_edge_list_file(path).graph;
  if (interval_depth > 0) {
    subtree::IntervalOptions io;
    io.max_exact_n = opts.max_exact_n;
    io.top.threads = opts.threads;
    const auto iv = subtree::certified_probability_interval(g, interval_depth, io);
    std::cout << "lower " << subtree::format_double(iv.lower) << "\nupper " << subtree::format_double(iv.upper)
              << "\nK " << iv.truncation_depth << "\n"
              << (iv.certified ? "certified" : "numerical") << '\n';
    return 0;
  }
  const auto p = subtree::spanning_probability(g, opts);
  std::cout << p.to_string() << '\n' << subtree::format_double(p.to_double()) << '\n';
  return 0;
}

int run_pairs(const std::string& path, const subtree::CountOptions& opts, int k) {
  const auto g = subtree::read_edge_list_file(path).graph;
  const auto pair = subtree::pair_count(g, k, opts);
  std::cout << "k " << k << "\npairs " << pair.value.get_str() << '\n';
  if (k <= subtree::degree_stats(g).min_degree) {
    const auto s = subtree::sandwich_report(g, k, opts);
    std::cout << "lower " << s.lower.get_str() << "\nupper " << s.upper.get_str() << '\n'
              << (s.pass ? "sandwich pass" : "sandwich FAIL") << '\n';
    if (!s.pass && k < subtree::degree_stats(g).min_degree) return kAssertion;
  }
  return 0;
}

int run_experiment(const std::string& name, const std::string& config_path,
                   const std::map<std::string, std::string>& flags) {
  auto config = subtree::default_config(name);
  if (!config_path.empty()) subtree::apply_settings(config, subtree::parse_config_file(config_path));
  subtree::apply_settings(config, flags);
  const auto report = subtree::run_experiment(config);
  const std::string text = config.format == "json" ? subtree::to_json(report) : subtree::to_csv(report);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + config.out);
    out << text;
  }
  if (report.violations > 0) {
    std::cerr << report.violations << " assertion(s) failed\n";
    return kAssertion;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subtree statistics and random-graph experiments"};
  app.require_subcommand(1);

  subtree::CountOptions opts;
  std::string graph_path;
  int k = 0;
  int interval_depth = 0;

  auto* census = app.add_subcommand("census", "Print the subtree census as JSON");
  census->add_option("graphfile", graph_path, "Edge-list file")->required();
  census->add_option("--max-exact-n", opts.max_exact_n, "Exact-census order cap");
  census->add_option("--threads", opts.threads, "Worker threads");

  auto* prob = app.add_subcommand("prob", "Print P(G) as a fraction and a float");
  prob->add_option("graphfile", graph_path, "Edge-list file")->required();
  prob->add_option("--max-exact-n", opts.max_exact_n, "Exact-census order cap");
  prob->add_option("--threads", opts.threads, "Worker threads");
  prob->add_option("--interval", interval_depth, "Enclose P(G) with truncation depth K instead");

  auto* pairs = app.add_subcommand("pairs", "Print the pair count and its sandwich bounds");
  pairs->add_option("graphfile", graph_path, "Edge-list file")->required();
  pairs->add_option("--k", k, "Number of removed vertices")->required();
  pairs->add_option("--max-exact-n", opts.max_exact_n, "Exact-census order cap");
  pairs->add_option("--threads", opts.threads, "Worker threads");

  auto* experiment = app.add_subcommand("experiment", "Run a named experiment");
  std::string name;
  std::string config_path;
  std::map<std::string, std::string> flags;
  experiment->add_option("name", name, "Experiment name")->required()->check(CLI::IsMember(subtree::experiment_names()));
  experiment->add_option("--config", config_path, "Flat key = value config file");
  for (const char* key : {"n", "p", "trials", "seed", "out", "format", "threads", "max-exact-n", "k"}) {
    experiment->add_option_function<std::string>(
        std::string("--") + key, [&flags, key](const std::string& v) { flags[key] = v; }, "Overrides the config");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*census) return run_census(graph_path, opts);
    if (*prob) return run_prob(graph_path, opts, interval_depth);
    if (*pairs) return run_pairs(graph_path, opts, k);
    return run_experiment(name, config_path, flags);
  } catch (const std::exception& e) {
    // Caps, unreadable or malformed inputs, and violated preconditions.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
