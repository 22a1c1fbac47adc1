#include "subtree/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "subtree/asymptotics.hpp"
#include "subtree/detail/parallel.hpp"
#include "subtree/exact_count.hpp"
#include "subtree/tree_tools.hpp"

namespace subtree {

namespace {

using Rows = std::vector<ReportRow>;

// Runs f(i) for every trial and returns the results in index order.
template <class F>
auto parallel_trials(std::size_t count, int threads, F&& f) {
  using Result = decltype(f(std::size_t{0}));
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  detail::parallel_for(count, threads, [&](std::size_t i, int) {
    try {
      out[i] = f(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Seed cell_seed(const ExperimentConfig& c, std::size_t cell, std::uint64_t trial) {
  return trial_seed(c.master, (static_cast<std::uint64_t>(cell) << 32) | trial);
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
};

Moments moments(const std::vector<double>& v) {
  Moments m;
  const double n = static_cast<double>(v.size());
  if (v.empty()) return m;
  m.mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double x : v) {
    const double d = x - m.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  if (v.size() > 1) m.variance = m2 / (n - 1.0);
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0.0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return m;
}

PSchedule constant_p(double p) { return PSchedule::parse(format_double(p)); }

class RowMaker {
 public:
  RowMaker(const ExperimentConfig& c) : name_(c.name), master_(c.master.value) {}

  ReportRow operator()(int n, const PSchedule& p, std::optional<std::uint64_t> trial, std::uint64_t seed,
                       std::string metric, std::string measured, std::string target = "",
                       std::string deviation = "", std::string flag = "") const {
    ReportRow r;
    r.experiment = name_;
    r.n = n;
    r.p = p.text();
    r.p_value = p.at(n);
    r.trial = trial;
    r.seed = trial ? seed : master_;
    r.metric = std::move(metric);
    r.measured = std::move(measured);
    r.target = std::move(target);
    r.deviation = std::move(deviation);
    r.flag = std::move(flag);
    return r;
  }

  ReportRow aggregate(int n, const PSchedule& p, std::string metric, std::string measured, std::string target = "",
                      std::string deviation = "", std::string flag = "") const {
    return (*this)(n, p, std::nullopt, 0, std::move(metric), std::move(measured), std::move(target),
                   std::move(deviation), std::move(flag));
  }

 private:
  std::string name_;
  std::uint64_t master_;
};

Report start(const ExperimentConfig& c) {
  Report r;
  r.experiment = c.name;
  r.generator = std::string(kGeneratorId);
  r.master_seed = c.master.value;
  return r;
}

void append(Report& report, std::vector<Rows>& parts) {
  for (auto& part : parts) {
    for (auto& row : part) report.rows.push_back(std::move(row));
  }
}

std::string gap(double measured, double target) { return format_double(std::abs(measured - target)); }

CountOptions count_options(const ExperimentConfig& c) { return {c.max_exact_n, 1}; }

Report closed_form_limit(const ExperimentConfig& c, bool bipartite) {
  Report report = start(c);
  RowMaker row(c);
  const PSchedule p1 = constant_p(1.0);
  const double target = bipartite ? bipartite_limit() : dense_limit(1.0);
  auto parts = parallel_trials(c.n_grid.size(), c.threads, [&](std::size_t i) {
    const int n = c.n_grid[i];
    const Census census = bipartite ? complete_bipartite_census(n, n) : complete_census(n);
    const auto prob = spanning_probability(census);
    const double pd = prob.to_double();
    Rows rows;
    const int order = bipartite ? 2 * n : n;
    rows.push_back(row.aggregate(order, p1, "P", format_double(pd), format_double(target), gap(pd, target), "exact"));
    if (order <= 24) rows.push_back(row.aggregate(order, p1, "P_exact", prob.to_string(), "", "", "exact"));
    return rows;
  });
  append(report, parts);
  return report;
}

}  // namespace

std::vector<std::string> experiment_names() {
  return {"complete_limit", "bipartite_limit", "gnp_dense",      "poisson_ratios", "janson_clt",
          "whp_events",     "sparse_decay",    "counterexamples", "mean_order",     "pair_identities"};
}

ExperimentConfig default_config(const std::string& name) {
  ExperimentConfig c;
  c.name = name;
  c.p_grid = {PSchedule::parse("0.5")};
  if (name == "complete_limit") {
    c.n_grid = {3, 4, 5, 10, 25, 50, 100, 200, 500};
    c.trials = 1;
  } else if (name == "bipartite_limit") {
    c.n_grid = {1, 2, 3, 5, 10, 25, 50};
    c.trials = 1;
  } else if (name == "gnp_dense") {
    c.n_grid = {8, 12, 16, 20};
    c.trials = 10;
    c.k = 3;
  } else if (name == "poisson_ratios") {
    c.n_grid = {100};
    c.p_grid = {PSchedule::parse("0.6")};
    c.trials = 3;
    c.k = 2;
  } else if (name == "janson_clt") {
    c.n_grid = {50, 100, 200};
    c.trials = 300;
  } else if (name == "whp_events") {
    c.n_grid = {50, 100, 200, 400};
    c.trials = 20;
  } else if (name == "sparse_decay") {
    c.n_grid = {12, 16, 20};
    c.p_grid = {PSchedule::parse("log:3")};
    c.trials = 20;
  } else if (name == "counterexamples") {
    c.n_grid = {22};
    c.p_grid = {PSchedule::parse("1")};
    c.trials = 1;
  } else if (name == "mean_order") {
    c.n_grid = {3, 10, 16, 20, 50, 100};
    c.trials = 5;
  } else if (name == "pair_identities") {
    c.n_grid = {5, 6, 7};
    c.trials = 10;
    c.k = 6;
  } else {
    throw std::invalid_argument("unknown experiment '" + name + "'");
  }
  return c;
}

Report run_experiment(const ExperimentConfig& config) {
  static const std::map<std::string, std::function<Report(const ExperimentConfig&)>> table = {
      {"complete_limit", run_complete_limit},   {"bipartite_limit", run_bipartite_limit},
      {"gnp_dense", run_gnp_dense},             {"poisson_ratios", run_poisson_ratios},
      {"janson_clt", run_janson_clt},           {"whp_events", run_whp_events},
      {"sparse_decay", run_sparse_decay},       {"counterexamples", run_counterexamples},
      {"mean_order", run_mean_order},           {"pair_identities", run_pair_identities},
  };
  const auto it = table.find(config.name);
  if (it == table.end()) throw std::invalid_argument("unknown experiment '" + config.name + "'");
  if (config.n_grid.empty() || config.p_grid.empty() || config.trials < 1) {
    throw std::invalid_argument("experiment needs a nonempty n grid, p grid and trial count");
  }
  return it->second(config);
}

Report run_complete_limit(const ExperimentConfig& c) { return closed_form_limit(c, false); }

Report run_bipartite_limit(const ExperimentConfig& c) { return closed_form_limit(c, true); }

Report run_gnp_dense(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  std::size_t cell = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      const double p = sched.at(n);
      const double target = p > 0.0 ? dense_limit(p) : 0.0;
      auto parts = parallel_trials(static_cast<std::size_t>(c.trials), c.threads, [&](std::size_t t) {
        const Seed seed = cell_seed(c, cell, t);
        const Graph g = sample_gnp({n, p}, seed);
        Rows rows;
        auto add = [&](std::string metric, std::string measured, std::string tgt, std::string dev, std::string flag) {
          rows.push_back(row(n, sched, t, seed.value, std::move(metric), std::move(measured), std::move(tgt),
                             std::move(dev), std::move(flag)));
        };
        if (!is_connected(g)) {
          add("P", "0", format_double(target), format_double(target), "disconnected");
          return rows;
        }
        if (n <= c.max_exact_n) {
          const double pd = spanning_probability(g, count_options(c)).to_double();
          add("P", format_double(pd), format_double(target), gap(pd, target), "exact");
          return rows;
        }
        try {
          IntervalOptions opts;
          opts.max_exact_n = c.max_exact_n;
          const auto iv = certified_probability_interval(g, c.k, opts);
          const std::string flag = iv.certified ? "certified" : "numerical";
          add("P_lower", format_double(iv.lower), format_double(target), "", flag);
          add("P_upper", format_double(iv.upper), format_double(target), "", flag);
          add("P_mid", format_double(iv.midpoint()), format_double(target), gap(iv.midpoint(), target), flag);
          add("relative_width", format_double(iv.relative_width()), "", "", flag);
        } catch (const CapExceeded& e) {
          add("P_interval", "", format_double(target), "", "budget_exceeded");
        } catch (const std::invalid_argument& e) {
          add("P_interval", "", format_double(target), "", "precondition_failed");
        }
        return rows;
      });
      std::vector<double> ps;
      for (const auto& part : parts) {
        for (const auto& r : part) {
          if (r.metric == "P" || r.metric == "P_mid") ps.push_back(std::stod(r.measured));
        }
      }
      append(report, parts);
      if (!ps.empty()) {
        const double med = median(ps);
        report.rows.push_back(row.aggregate(n, sched, "median_P", format_double(med), format_double(target),
                                            gap(med, target), "empirical"));
      }
      ++cell;
    }
  }
  return report;
}

Report run_poisson_ratios(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  std::size_t cell = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      const double p = sched.at(n);
      const int depth = std::min(c.k, n - 1);
      auto parts = parallel_trials(static_cast<std::size_t>(c.trials), c.threads, [&](std::size_t t) {
        const Seed seed = cell_seed(c, cell, t);
        const Graph g = sample_gnp({n, p}, seed);
        Rows rows;
        if (!is_connected(g)) {
          rows.push_back(row(n, sched, t, seed.value, "ratio_0", "", "1", "", "disconnected"));
          return rows;
        }
        const auto top = top_census(g, depth);
        for (int k = 0; k <= depth; ++k) {
          const double scaled = top.ratio(k) / poisson_ratio_target(k, p);
          rows.push_back(row(n, sched, t, seed.value, "ratio_" + std::to_string(k), format_double(scaled), "1",
                             gap(scaled, 1.0), top.exact ? "exact" : "numerical"));
        }
        return rows;
      });
      append(report, parts);
      ++cell;
    }
  }
  return report;
}

Report run_janson_clt(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  std::size_t cell = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      const double p = sched.at(n);
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("janson_clt needs 0 < p < 1");
      auto stats = parallel_trials(static_cast<std::size_t>(c.trials), c.threads, [&](std::size_t t) {
        const Graph g = sample_gnp({n, p}, cell_seed(c, cell, t));
        if (!is_connected(g)) return std::nan("");
        return janson_statistic(log_spanning_tree_count(g), n, p);
      });
      std::vector<double> kept;
      for (std::size_t t = 0; t < stats.size(); ++t) {
        const auto seed = cell_seed(c, cell, t).value;
        if (std::isnan(stats[t])) {
          report.rows.push_back(row(n, sched, t, seed, "statistic", "", "", "", "disconnected"));
          continue;
        }
        kept.push_back(stats[t]);
        report.rows.push_back(row(n, sched, t, seed, "statistic", format_double(stats[t]), "0", "", "empirical"));
      }
      const auto m = moments(kept);
      const double var_target = 2.0 * (1.0 - p);
      const double count = static_cast<double>(kept.size());
      const double jb = count / 6.0 * (m.skewness * m.skewness + 0.25 * m.excess_kurtosis * m.excess_kurtosis);
      report.rows.push_back(row.aggregate(n, sched, "samples", std::to_string(kept.size()), "", "", "empirical"));
      report.rows.push_back(
          row.aggregate(n, sched, "dropped", std::to_string(stats.size() - kept.size()), "", "", "disconnected"));
      report.rows.push_back(
          row.aggregate(n, sched, "mean", format_double(m.mean), "0", gap(m.mean, 0.0), "empirical"));
      report.rows.push_back(row.aggregate(n, sched, "variance", format_double(m.variance), format_double(var_target),
                                          gap(m.variance, var_target), "empirical"));
      report.rows.push_back(row.aggregate(n, sched, "variance_ratio", format_double(m.variance / var_target), "1",
                                          gap(m.variance / var_target, 1.0), "empirical"));
      report.rows.push_back(row.aggregate(n, sched, "skewness", format_double(m.skewness), "0", "", "empirical"));
      report.rows.push_back(
          row.aggregate(n, sched, "excess_kurtosis", format_double(m.excess_kurtosis), "0", "", "empirical"));
      report.rows.push_back(row.aggregate(n, sched, "jarque_bera", format_double(jb), "", "", "empirical"));
      ++cell;
    }
  }
  return report;
}

Report run_whp_events(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  static const std::vector<std::string> events = {"max_degree_upper", "min_degree_lower", "log_spanning_lower",
                                                  "ust_leaves_window", "max_degree_4np"};
  std::size_t cell = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      const double p = sched.at(n);
      const double nd = static_cast<double>(n);
      const double slack = std::cbrt(nd * nd);
      struct Outcome {
        std::map<std::string, int> event;  // -1 when not evaluated
        double deficiency = 0.0;
      };
      auto outcomes = parallel_trials(static_cast<std::size_t>(c.trials), c.threads, [&](std::size_t t) {
        const Seed seed = cell_seed(c, cell, t);
        Outcome o;
        for (const auto& e : events) o.event[e] = -1;
        int min_deg = 0;
        int max_deg = 0;
        int giant = 0;
        if (n <= kMaxVertices) {
          const Graph g = sample_gnp({n, p}, seed);
          const auto ds = degree_stats(g);
          min_deg = ds.min_degree;
          max_deg = ds.max_degree;
          giant = largest_component_size(g);
          if (p > 0.0) {
            const double centre = (nd - 2.0) * std::log(nd) + (nd - 1.0) * std::log(p);
            o.event["log_spanning_lower"] =
                ds.connected && log_spanning_tree_count(g) >= centre - std::pow(nd, 1.0 / 6.0) ? 1 : 0;
          }
          if (ds.connected && n >= 2) {
            const auto tree = sample_uniform_spanning_tree(g, trial_seed(seed, 0));
            o.event["ust_leaves_window"] = std::abs(leaf_count(tree) - nd / std::numbers::e) <= slack ? 1 : 0;
          } else {
            o.event["ust_leaves_window"] = 0;
          }
        } else {
          const auto s = sample_gnp_summary({n, p}, seed);
          min_deg = s.min_degree;
          max_deg = s.max_degree;
          giant = s.largest_component;
        }
        o.event["max_degree_upper"] = max_deg <= p * nd + slack ? 1 : 0;
        o.event["min_degree_lower"] = min_deg >= p * nd - slack ? 1 : 0;
        o.event["max_degree_4np"] = max_deg <= 4.0 * nd * p ? 1 : 0;
        o.deficiency = p * (nd - giant);
        return o;
      });
      std::vector<double> deficiencies;
      for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const auto seed = cell_seed(c, cell, t).value;
        for (const auto& e : events) {
          const int v = outcomes[t].event.at(e);
          if (v >= 0) report.rows.push_back(row(n, sched, t, seed, e, std::to_string(v), "1", "", "empirical"));
        }
        deficiencies.push_back(outcomes[t].deficiency);
        report.rows.push_back(
            row(n, sched, t, seed, "giant_deficiency", format_double(outcomes[t].deficiency), "0", "", "empirical"));
      }
      for (const auto& e : events) {
        int hits = 0;
        int seen = 0;
        for (const auto& o : outcomes) {
          const int v = o.event.at(e);
          if (v < 0) continue;
          ++seen;
          hits += v;
        }
        if (seen == 0) continue;
        const double freq = static_cast<double>(hits) / seen;
        report.rows.push_back(
            row.aggregate(n, sched, e + "_frequency", format_double(freq), "1", gap(freq, 1.0), "empirical"));
      }
      report.rows.push_back(row.aggregate(n, sched, "giant_deficiency_median", format_double(median(deficiencies)),
                                          "0", "", "empirical"));
      ++cell;
    }
  }
  return report;
}

Report run_sparse_decay(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  const auto wanted = static_cast<std::size_t>(c.trials);
  const std::size_t max_attempts = wanted * 100;
  std::size_t cell = 0;
  std::vector<double> medians;
  double c_hat = INFINITY;
  std::size_t fitted = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      const double p = sched.at(n);
      std::vector<std::pair<std::size_t, double>> connected;  // (trial, P)
      std::size_t attempts = 0;
      std::size_t disconnected = 0;
      // Batches of trial indices; the first `wanted` connected samples in
      // index order are kept, independent of the worker count.
      while (connected.size() < wanted && attempts < max_attempts) {
        const std::size_t batch = wanted;
        const std::size_t base = attempts;
        auto ps = parallel_trials(batch, c.threads, [&](std::size_t i) {
          const Graph g = sample_gnp({n, p}, cell_seed(c, cell, base + i));
          if (!is_connected(g)) return -1.0;
          return spanning_probability(g, count_options(c)).to_double();
        });
        for (std::size_t i = 0; i < batch && connected.size() < wanted; ++i) {
          ++attempts;
          if (ps[i] < 0.0) {
            ++disconnected;
          } else {
            connected.emplace_back(base + i, ps[i]);
          }
        }
      }
      std::vector<double> values;
      for (const auto& [t, pv] : connected) {
        values.push_back(pv);
        report.rows.push_back(row(n, sched, t, cell_seed(c, cell, t).value, "P", format_double(pv),
                                  format_double(sparse_envelope(p, 1.0 / std::numbers::e)), "", "exact"));
        if (pv > 0.0 && p > 0.0) {
          c_hat = std::min(c_hat, -p * std::log(pv));
          ++fitted;
        }
      }
      const double med = median(values);
      medians.push_back(med);
      report.rows.push_back(
          row.aggregate(n, sched, "connected_samples", std::to_string(connected.size()), "", "", "empirical"));
      report.rows.push_back(
          row.aggregate(n, sched, "disconnected_excluded", std::to_string(disconnected), "", "", "disconnected"));
      report.rows.push_back(row.aggregate(n, sched, "median_P", format_double(med), "", "", "empirical"));
      ++cell;
    }
  }
  bool decreasing = medians.size() >= 2;
  for (std::size_t i = 1; i < medians.size(); ++i) decreasing = decreasing && medians[i] < medians[i - 1];
  const PSchedule& sched = c.p_grid.front();
  const int last_n = c.n_grid.back();
  report.rows.push_back(row.aggregate(last_n, sched, "median_decreasing", decreasing ? "1" : "0", "1", "",
                                      "empirical"));
  report.rows.push_back(row.aggregate(last_n, sched, "c_hat", fitted ? format_double(c_hat) : "", "", "",
                                      "empirical"));
  return report;
}

Report run_counterexamples(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  struct Case {
    Family family;
    int clique;
    int path;
  };
  const std::vector<Case> cases = {
      {Family::clique_path_clique, 3, 2},   {Family::clique_path_clique, 4, 4},
      {Family::clique_path_clique, 5, 7},   {Family::clique_path_clique, 6, 10},
      {Family::clique_pendant_path, 5, 5},  {Family::clique_pendant_path, 5, 10},
      {Family::clique_pendant_path, 6, 12}, {Family::clique_pendant_path, 6, 16},
  };
  const PSchedule p1 = constant_p(1.0);
  auto parts = parallel_trials(cases.size(), c.threads, [&](std::size_t i) {
    const auto& cs = cases[i];
    const Graph g = named_graph({cs.family, cs.clique, cs.path});
    const int n = g.order();
    Rows rows;
    if (n > c.max_exact_n) return rows;
    const std::string label = family_name(cs.family) + ":" + std::to_string(cs.clique) + "," + std::to_string(cs.path);
    auto add = [&](std::string metric, std::string measured, std::string target, std::string dev, std::string flag) {
      rows.push_back(row.aggregate(n, p1, label + "/" + metric, std::move(measured), std::move(target),
                                   std::move(dev), std::move(flag)));
    };
    const auto prob = spanning_probability(g, count_options(c));
    const double pd = prob.to_double();
    const mpq_class path_p(2, static_cast<long>(n) * (n + 1));
    const double density = static_cast<double>(g.edge_count()) / (0.5 * n * (n - 1));
    add("P", format_double(pd), "", "", "exact");
    add("P_exact", prob.to_string(), "", "", "exact");
    add("density", format_double(density), "", "", "exact");
    add("path_P", format_double(to_double(path_p)), "", "", "exact");
    add("ratio_to_path", format_double(to_double(prob.value() / path_p)), "", "", "exact");
    if (cs.family == Family::clique_pendant_path) {
      const double bound = 1.0 / cs.path;
      add("pendant_bound", format_double(pd), format_double(bound), "", pd <= bound ? "pass" : "fail");
    }
    return rows;
  });
  append(report, parts);
  return report;
}

Report run_mean_order(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  const PSchedule p1 = constant_p(1.0);
  const double complete_target = 1.0 + 1.0 / std::numbers::e;
  for (const int n : c.n_grid) {
    const double value = to_double(mpq_class(n) - mean_subtree_edges(complete_census(n)));
    report.rows.push_back(row.aggregate(n, p1, "complete_n_minus_mean", format_double(value),
                                        format_double(complete_target), gap(value, complete_target), "exact"));
  }
  std::size_t cell = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      if (n > c.max_exact_n) continue;
      const double p = sched.at(n);
      const double target = p > 0.0 ? 1.0 + 1.0 / (std::numbers::e * p) : INFINITY;
      auto parts = parallel_trials(static_cast<std::size_t>(c.trials), c.threads, [&](std::size_t t) {
        const Seed seed = cell_seed(c, cell, t);
        const Graph g = sample_gnp({n, p}, seed);
        Rows rows;
        if (!is_connected(g)) {
          rows.push_back(row(n, sched, t, seed.value, "gnp_n_minus_mean", "", format_double(target), "", "disconnected"));
          return rows;
        }
        const double value = to_double(mpq_class(n) - mean_subtree_edges(subtree_census(g, count_options(c))));
        rows.push_back(row(n, sched, t, seed.value, "gnp_n_minus_mean", format_double(value), format_double(target),
                           gap(value, target), "exact"));
        return rows;
      });
      append(report, parts);
      ++cell;
    }
  }
  return report;
}

Report run_pair_identities(const ExperimentConfig& c) {
  Report report = start(c);
  RowMaker row(c);
  struct Item {
    std::string label;
    Graph graph;
    double p = 0.0;  // 0 for named graphs
    std::optional<std::uint64_t> trial;
    std::uint64_t seed = 0;
    const PSchedule* sched = nullptr;
  };
  const PSchedule p1 = constant_p(1.0);
  std::vector<Item> items;
  for (int n = 2; n <= 7; ++n) {
    items.push_back({"complete:" + std::to_string(n), complete_graph(n), 0.0, std::nullopt, 0, &p1});
    items.push_back({"path:" + std::to_string(n), path_graph(n), 0.0, std::nullopt, 0, &p1});
    if (n >= 3) {
      items.push_back({"cycle:" + std::to_string(n), cycle_graph(n), 0.0, std::nullopt, 0, &p1});
      items.push_back({"star:" + std::to_string(n), star_graph(n), 0.0, std::nullopt, 0, &p1});
    }
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    items.push_back({"complete_bipartite:" + std::to_string(a) + "," + std::to_string(b),
                     complete_bipartite_graph(a, b), 0.0, std::nullopt, 0, &p1});
  }
  std::size_t cell = 0;
  for (const int n : c.n_grid) {
    for (const auto& sched : c.p_grid) {
      const double p = sched.at(n);
      for (int t = 0; t < c.trials; ++t) {
        const Seed seed = cell_seed(c, cell, static_cast<std::uint64_t>(t));
        Graph g = sample_gnp({n, p}, seed);
        if (!is_connected(g)) continue;
        items.push_back({"gnp", std::move(g), p, static_cast<std::uint64_t>(t), seed.value, &sched});
      }
      ++cell;
    }
  }

  struct Checked {
    Rows rows;
    int violations = 0;
  };
  auto results = parallel_trials(items.size(), c.threads, [&](std::size_t i) {
    const auto& item = items[i];
    const Graph& g = item.graph;
    const int n = g.order();
    Checked out;
    auto add = [&](std::string metric, std::string measured, std::string target, bool pass) {
      if (!pass) ++out.violations;
      out.rows.push_back(row(n, *item.sched, item.trial, item.seed, item.label + "/" + metric, std::move(measured),
                             std::move(target), "", pass ? "pass" : "fail"));
    };
    const Census census = subtree_census(g, count_options(c));
    const int delta = degree_stats(g).min_degree;
    const int kmax = std::min(c.k, n - 1);
    for (int k = 0; k <= kmax; ++k) {
      const auto pair = pair_count(g, k, count_options(c));
      if (n <= kPairOracleCap) {
        const auto oracle = pair_count_oracle(g, k);
        add("pair_" + std::to_string(k), pair.value.get_str(), oracle.value.get_str(), pair.value == oracle.value);
      }
      if (k <= delta - 1) {
        const auto s = sandwich_report(g, census, k, count_options(c));
        add("sandwich_" + std::to_string(k), s.value.get_str(), s.lower.get_str() + ".." + s.upper.get_str(), s.pass);
      }
      if (item.p > 0.0 && census[n - k] > 0) {
        const mpq_class denom = mpq_class(census[n - k]) * std::pow(item.p * n, k);
        const double ratio = to_double(mpq_class(pair.value) / denom);
        out.rows.push_back(row(n, *item.sched, item.trial, item.seed, item.label + "/pair_ratio_" + std::to_string(k),
                               format_double(ratio), "1", gap(ratio, 1.0), "reported"));
      }
    }
    const auto prefix = prefix_bound_check(census);
    add("prefix_bound", prefix.pass ? "ok" : "violated at r=" + std::to_string(prefix.first_violation), "ok",
        prefix.pass);
    return out;
  });
  for (auto& r : results) {
    report.violations += r.violations;
    for (auto& x : r.rows) report.rows.push_back(std::move(x));
  }

  // Leaf sandwich on uniform random trees, all k.
  std::size_t tree_cell = 1u << 20;
  for (const int n : c.n_grid) {
    if (n < 2) continue;
    auto checks = parallel_trials(static_cast<std::size_t>(c.trials), c.threads, [&](std::size_t t) {
      const Seed seed = cell_seed(c, tree_cell, t);
      const auto tree = sample_uniform_labelled_tree(n, seed);
      const Census census = tree_subtree_polynomial(tree);
      int passed = 0;
      for (int k = 0; k <= n - 1; ++k) passed += leaf_sandwich_check(tree, census, k).pass ? 1 : 0;
      return std::make_pair(seed.value, passed);
    });
    for (std::size_t t = 0; t < checks.size(); ++t) {
      const bool pass = checks[t].second == n;
      if (!pass) ++report.violations;
      report.rows.push_back(row(n, p1, t, checks[t].first, "tree/leaf_sandwich",
                                std::to_string(checks[t].second) + "/" + std::to_string(n), "all", "",
                                pass ? "pass" : "fail"));
    }
    ++tree_cell;
  }
  return report;
}

}  // namespace subtree
