// Acceptance suite: one PASS/FAIL line per criterion.
//
//   subtree_acceptance                 run every criterion
//   subtree_acceptance --criterion 7   run one

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "subtree/asymptotics.hpp"
#include "subtree/exact_count.hpp"
#include "subtree/experiments.hpp"
#include "subtree/random_models.hpp"
#include "subtree/tree_tools.hpp"
#include "support/corpus.hpp"

using namespace subtree;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double seconds;  // time limit; 0 when none is specified
  std::function<Outcome()> run;
};

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// >= 200 connected graphs of order <= 7: every named family plus G(n, 1/2).
std::vector<corpus::CorpusGraph> small_corpus() {
  auto graphs = corpus::connected_only(corpus::named_corpus(7));
  for (auto& g : corpus::random_corpus(160, 2, 7, 0.5, 20240601)) graphs.push_back(std::move(g));
  return graphs;
}

Outcome census_oracle() {
  const auto graphs = small_corpus();
  int bad = 0;
  for (const auto& [label, g] : graphs) {
    if (subtree_census(g) != brute_force_census(g)) ++bad;
    if (subtree_census(g)[g.order()] != spanning_tree_count(g)) ++bad;
  }
  return {bad == 0 && graphs.size() >= 200, fmt("%zu graphs, %d mismatches", graphs.size(), bad)};
}

Outcome pair_oracle() {
  const auto graphs = small_corpus();
  int checked = 0;
  int bad = 0;
  for (const auto& [label, g] : graphs) {
    for (int k = 0; k < g.order(); ++k) {
      ++checked;
      if (pair_count(g, k).value != pair_count_oracle(g, k).value) ++bad;
    }
  }
  return {bad == 0, fmt("%d (graph, k) cases, %d mismatches", checked, bad)};
}

Outcome inequalities() {
  int sandwiches = 0;
  int prefix = 0;
  int violations = 0;
  for (const auto& [label, g] : small_corpus()) {
    const auto census = subtree_census(g);
    const int delta = degree_stats(g).min_degree;
    for (int k = 0; k <= delta - 1; ++k) {
      ++sandwiches;
      if (!sandwich_report(g, census, k).pass) ++violations;
    }
    ++prefix;
    if (!prefix_bound_check(census).pass) ++violations;
  }
  int leaf_checks = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(i % 63);
    const auto tree = sample_uniform_labelled_tree(n, trial_seed(Seed{3401}, i));
    const auto census = tree_subtree_polynomial(tree);
    for (int k = 0; k < n; ++k) {
      ++leaf_checks;
      if (!leaf_sandwich_check(tree, census, k).pass) ++violations;
    }
  }
  return {violations == 0, fmt("%d sandwich, %d prefix, %d leaf checks; %d violations", sandwiches, prefix,
                               leaf_checks, violations)};
}

Outcome complete_limit() {
  for (int n = 1; n <= 12; ++n) {
    if (closed_form_census(FamilySpec{Family::complete, n}) != subtree_census(complete_graph(n))) {
      return {false, fmt("closed form disagrees with subtree_census at n=%d", n)};
    }
  }
  const double p = spanning_probability(complete_census(100)).to_double();
  const double gap = std::abs(p - dense_limit(1.0));
  return {gap < 0.01, fmt("P(K_100)=%.10f, e^{-1/e}=%.10f, gap %.3g (tol 0.01)", p, dense_limit(1.0), gap)};
}

Outcome bipartite_limit_check() {
  for (const auto& [a, b] : {std::pair{2, 2}, std::pair{2, 3}}) {
    if (complete_bipartite_census(a, b) != brute_force_census(complete_bipartite_graph(a, b))) {
      return {false, fmt("closed form disagrees with brute force at K_{%d,%d}", a, b)};
    }
  }
  const double p = spanning_probability(complete_bipartite_census(50, 50)).to_double();
  const double gap = std::abs(p - bipartite_limit());
  return {gap < 0.02, fmt("P(K_50,50)=%.10f, e^{-2/e}=%.10f, gap %.3g (tol 0.02)", p, bipartite_limit(), gap)};
}

Outcome leaf_formula() {
  int bad = 0;
  for (int n = 2; n <= 8; ++n) {
    std::vector<long> tally(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
      ++tally[static_cast<std::size_t>(leaf_count(prufer_decode(seq, n)))];
      std::size_t i = 0;
      while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
      if (i == seq.size()) break;
    }
    for (int l = 0; l <= n; ++l) {
      if (trees_with_leaf_count(n, l) != tally[static_cast<std::size_t>(l)]) ++bad;
    }
  }
  for (int n = 2; n <= 12; ++n) {
    mpz_class sum = 0;
    for (int l = 0; l <= n; ++l) sum += trees_with_leaf_count(n, l);
    mpz_class cayley;
    mpz_ui_pow_ui(cayley.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    if (sum != cayley) ++bad;
  }
  return {bad == 0, fmt("exhaustive tallies n<=8, sums n<=12; %d mismatches", bad)};
}

// Every rooted forest shape on up to 7 nodes appears as a parent array with
// parent[v] < v; random relabellings cover the remaining labellings.
Outcome linear_extensions() {
  int checked = 0;
  int bad = 0;
  Rng rng(Seed{77});
  for (int n = 0; n <= 7; ++n) {
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    while (true) {
      const RootedForest f(parent);
      ++checked;
      if (forest_linear_extensions(f) != linear_extensions_oracle(f)) ++bad;
      if (n >= 2 && rng.below(20) == 0) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        std::vector<int> relabelled(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
          const int pv = parent[static_cast<std::size_t>(v)];
          relabelled[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = pv < 0 ? -1 : perm[static_cast<std::size_t>(pv)];
        }
        const RootedForest g(relabelled);
        ++checked;
        if (forest_linear_extensions(g) != linear_extensions_oracle(g)) ++bad;
      }
      // Next parent array in mixed radix: parent[v] ranges over -1..v-1.
      int v = 1;
      while (v < n && ++parent[static_cast<std::size_t>(v)] == v) parent[static_cast<std::size_t>(v++)] = -1;
      if (v >= n) break;
    }
  }
  return {bad == 0, fmt("%d forests, %d mismatches", checked, bad)};
}

Outcome spanning_tree_sampler() {
  const Graph k4 = complete_graph(4);
  const int samples = 16000;
  std::map<std::vector<Edge>, int> counts;
  for (int i = 0; i < samples; ++i) {
    ++counts[sample_uniform_spanning_tree(k4, trial_seed(Seed{8}, static_cast<std::uint64_t>(i))).edges()];
  }
  const double expected = samples / 16.0;
  double chi = (16.0 - static_cast<double>(counts.size())) * expected;
  for (const auto& [tree, c] : counts) chi += (c - expected) * (c - expected) / expected;
  const double critical = 37.6973;  // chi-square, 15 degrees of freedom, upper 1e-3
  return {counts.size() == 16 && chi < critical,
          fmt("%zu distinct trees, chi2=%.3f (critical %.4f)", counts.size(), chi, critical)};
}

Outcome janson() {
  const int n = 100;
  const double p = 0.5;
  const int trials = 300;
  std::vector<double> stats;
  for (int t = 0; t < trials; ++t) {
    const Graph g = sample_gnp({n, p}, trial_seed(Seed{9}, static_cast<std::uint64_t>(t)));
    if (!is_connected(g)) continue;
    stats.push_back(janson_statistic(log_spanning_tree_count(g), n, p));
  }
  const double m = std::accumulate(stats.begin(), stats.end(), 0.0) / static_cast<double>(stats.size());
  double ss = 0.0;
  for (double s : stats) ss += (s - m) * (s - m);
  const double var = ss / static_cast<double>(stats.size() - 1);
  const double target = 2.0 * (1.0 - p);
  const bool ok = std::abs(m) <= 0.25 && var >= 0.6 * target && var <= 1.4 * target;
  return {ok, fmt("%zu samples, mean %.4f (|.|<=0.25), variance %.4f in [%.2f, %.2f]", stats.size(), m, var,
                  0.6 * target, 1.4 * target)};
}

Outcome poisson() {
  const int n = 100;
  const double p = 0.6;
  const Graph g = sample_gnp({n, p}, Seed{10});
  const auto top = top_census(g, 2);
  bool ok = true;
  std::string detail = top.exact ? "exact" : "log-domain";
  for (int k = 1; k <= 2; ++k) {
    const double scaled = top.ratio(k) / poisson_ratio_target(k, p);
    ok = ok && scaled >= 0.8 && scaled <= 1.2;
    detail += fmt("; k=%d: k!(ep)^k r_k=%.4f", k, scaled);
  }
  return {ok, detail + " (window [0.8, 1.2])"};
}

Outcome interval() {
  std::string detail;
  bool ok = true;

  // Part 1: n = 200, p = 1/2, K = 12.
  const int n = 200;
  const int K = 12;
  const Graph g = sample_gnp({n, 0.5}, Seed{11});
  const int delta = degree_stats(g).min_degree;
  detail += fmt("G(200,0.5) delta=%d", delta);
  try {
    const auto iv = certified_probability_interval(g, K);
    const double target = dense_limit(0.5);
    const double mid_gap = std::abs(iv.midpoint() - target) / target;
    ok = iv.relative_width() < 1e-3 && mid_gap <= 0.15;
    detail += fmt(", K=12 width %.3g, midpoint %.4f", iv.relative_width(), iv.midpoint());
  } catch (const CapExceeded& e) {
    ok = false;
    detail += std::string(", K=12 not run: ") + e.what();
  }
  // Whatever the head sum, the width is at least 2B/(2H+B), with H the
  // per-k upper bound on the head and B the tail bound actually used.
  const auto t0 = std::chrono::steady_clock::now();
  const auto probe = certified_probability_interval(g, 2);
  const double per_det = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / (n + 1);
  double h = 0.0;
  double between = 0.0;
  for (int k = 0; k < K; ++k) h += eq1_bound(n, delta, k);
  for (int k = 2; k < K; ++k) between += eq1_bound(n, delta, k);
  const double b = probe.tail - between;
  double subsets = 1.0;
  for (int i = 1; i < K; ++i) subsets = subsets * (n - K + 1 + i) / i;
  detail += fmt("; tail bound B(K=12)=%.3g forces width >= %.3g; C(200,11)=%.3g determinants at %.2g s each",
                b, 2 * b / (2 * h + b), subsets, per_det);

  // Part 2: exact ratios on graphs of order <= 20 contain the exact P.
  int checked = 0;
  int missed = 0;
  std::vector<corpus::CorpusGraph> graphs;
  for (int n2 : {7, 10, 14, 20}) graphs.push_back({"complete", complete_graph(n2)});
  graphs.push_back({"bipartite", complete_bipartite_graph(8, 9)});
  for (auto& c : corpus::random_corpus(12, 9, 20, 0.85, 1111)) graphs.push_back(std::move(c));
  for (const auto& [label, h2] : graphs) {
    const int d = degree_stats(h2).min_degree;
    const double exact = spanning_probability(h2).to_double();
    for (int k = 1; 2 * k < d; ++k) {
      const auto iv = certified_probability_interval(h2, k);
      ++checked;
      if (!iv.certified || !iv.contains(exact)) ++missed;
    }
  }
  ok = ok && missed == 0;
  detail += fmt("; order<=20 containment %d/%d", checked - missed, checked);
  return {ok, detail};
}

Outcome sparse_trend() {
  const auto report = run_experiment(default_config("sparse_decay"));
  std::string medians;
  double c_hat = NAN;
  bool decreasing = false;
  for (const auto& row : report.rows) {
    if (row.metric == "median_P") medians += fmt(" n=%d:%s", row.n, row.measured.c_str());
    if (row.metric == "median_decreasing") decreasing = row.measured == "1";
    if (row.metric == "c_hat" && !row.measured.empty()) c_hat = std::stod(row.measured);
  }
  return {decreasing && c_hat > 0.0, "medians" + medians + fmt(", c_hat=%.4f", c_hat)};
}

Outcome counterexample() {
  const Graph g = clique_path_clique(6, 10);
  const int n = g.order();
  const double density = 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1));
  const auto p = spanning_probability(g);
  const auto path = spanning_probability(path_graph(n));
  const double factor = p.to_double() / path.to_double();
  const bool pinned = p.value() == mpq_class(31104, 83867);
  return {n == 22 && density < 0.2 && factor > 100.0 && pinned,
          fmt("order %d, density %.4f, P=%s (pinned 31104/83867: %s), P(path)=%s, ratio %.2f (need > 100)", n,
              density, p.to_string().c_str(), pinned ? "yes" : "no", path.to_string().c_str(), factor)};
}

Outcome mean_order() {
  const double mean = to_double(mean_subtree_edges(complete_census(100)));
  const double target = 1.0 + std::exp(-1.0);
  const double gap = std::abs((100.0 - mean) - target);
  return {gap < 0.02, fmt("100 - mean edges = %.6f, 1+1/e = %.6f, gap %.3g (tol 0.02)", 100.0 - mean, target, gap)};
}

Outcome reproducibility() {
  const std::map<std::string, std::map<std::string, std::string>> small = {
      {"complete_limit", {{"n", "5,50"}}},
      {"bipartite_limit", {{"n", "3,20"}}},
      {"gnp_dense", {{"n", "10,14"}, {"trials", "6"}}},
      {"poisson_ratios", {{"n", "40"}, {"trials", "3"}}},
      {"janson_clt", {{"n", "40"}, {"trials", "16"}}},
      {"whp_events", {{"n", "60"}, {"trials", "6"}}},
      {"sparse_decay", {{"n", "8,10"}, {"trials", "5"}}},
      {"counterexamples", {}},
      {"mean_order", {{"n", "30"}, {"trials", "4"}}},
      {"pair_identities", {{"n", "5,6"}, {"trials", "3"}}},
  };
  int same = 0;
  std::string differing;
  for (const auto& name : experiment_names()) {
    auto one = default_config(name);
    if (const auto it = small.find(name); it != small.end()) apply_settings(one, it->second);
    one.threads = 1;
    auto eight = one;
    eight.threads = 8;
    const auto a = run_experiment(one);
    const auto b = run_experiment(eight);
    if (to_csv(a) == to_csv(b) && to_json(a) == to_json(b)) {
      ++same;
    } else {
      differing += " " + name;
    }
  }
  const auto total = experiment_names().size();
  return {same == static_cast<int>(total),
          fmt("%d/%zu experiments byte-identical under 1 and 8 workers", same, total) + differing};
}

std::vector<Criterion> criteria() {
  return {
      {1, "census oracle equivalence", 60, census_oracle},
      {2, "pair oracle equivalence", 120, pair_oracle},
      {3, "deterministic inequalities", 0, inequalities},
      {4, "complete-graph limit", 5, complete_limit},
      {5, "bipartite limit", 5, bipartite_limit_check},
      {6, "leaf-count formula", 60, leaf_formula},
      {7, "linear extensions", 0, linear_extensions},
      {8, "uniform spanning-tree sampler", 10, spanning_tree_sampler},
      {9, "Janson statistic", 600, janson},
      {10, "Poisson ratios", 300, poisson},
      {11, "certified interval", 600, interval},
      {12, "sparse decay trend", 600, sparse_trend},
      {13, "clique-path-clique counterexample", 300, counterexample},
      {14, "mean subtree order", 0, mean_order},
      {15, "reproducibility", 0, reproducibility},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-15)")->check(CLI::Range(1, 15));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.2f s", secs);
    if (c.seconds > 0) {
      timing += fmt(" of %.0f s", c.seconds);
      if (secs > c.seconds) {
        out.pass = false;
        timing += " EXCEEDED";
      }
    }
    std::printf("%s c%02d %s: %s [%s]\n", out.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), out.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
