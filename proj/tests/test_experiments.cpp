#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "subtree/exact_count.hpp"
#include "subtree/experiments.hpp"

using namespace subtree;

namespace {

ExperimentConfig small(const std::string& name, std::map<std::string, std::string> settings) {
  auto c = default_config(name);
  apply_settings(c, settings);
  return c;
}

const ReportRow* find_row(const Report& r, const std::string& metric, int n = -1) {
  for (const auto& row : r.rows) {
    if (row.metric == metric && (n < 0 || row.n == n)) return &row;
  }
  return nullptr;
}

}  // namespace

TEST(PScheduleTest, Presets) {
  EXPECT_DOUBLE_EQ(PSchedule::parse("0.25").at(100), 0.25);
  EXPECT_NEAR(PSchedule::parse("log:3").at(100), 3 * std::log(100.0) / 100, 1e-15);
  EXPECT_NEAR(PSchedule::parse("sqrt:2").at(100), 0.2, 1e-15);
  EXPECT_DOUBLE_EQ(PSchedule::parse("log:3").at(2), 1.0);  // clamped
  EXPECT_EQ(PSchedule::parse(" log:3 ").text(), "log:3");
  EXPECT_THROW(PSchedule::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(PSchedule::parse("exp:2"), std::invalid_argument);
  EXPECT_THROW(PSchedule::parse("log:-1"), std::invalid_argument);
  EXPECT_THROW(PSchedule::parse("abc"), std::invalid_argument);
}

TEST(ConfigTest, ParseAndApply) {
  std::istringstream in("# comment\nn = 10, 20\np=0.5,log:2\ntrials=7\nseed = 18446744073709551615\nformat=json\n");
  auto settings = parse_config_text(in);
  auto c = default_config("gnp_dense");
  apply_settings(c, settings);
  EXPECT_EQ(c.n_grid, (std::vector<int>{10, 20}));
  ASSERT_EQ(c.p_grid.size(), 2U);
  EXPECT_EQ(c.p_grid[1].kind(), PSchedule::Kind::log);
  EXPECT_EQ(c.trials, 7);
  EXPECT_EQ(c.master.value, 18446744073709551615ULL);
  EXPECT_EQ(c.format, "json");
  // Flags applied afterwards win.
  apply_settings(c, {{"trials", "3"}});
  EXPECT_EQ(c.trials, 3);
}

TEST(ConfigTest, Errors) {
  std::istringstream bad("n 10\n");
  EXPECT_THROW(parse_config_text(bad), std::invalid_argument);
  auto c = default_config("gnp_dense");
  EXPECT_THROW(apply_settings(c, {{"colour", "red"}}), std::invalid_argument);
  EXPECT_THROW(apply_settings(c, {{"n", "0"}}), std::invalid_argument);
  EXPECT_THROW(apply_settings(c, {{"trials", "x"}}), std::invalid_argument);
  EXPECT_THROW(apply_settings(c, {{"seed", "-1"}}), std::invalid_argument);
  EXPECT_THROW(apply_settings(c, {{"format", "xml"}}), std::invalid_argument);
  EXPECT_THROW(apply_settings(c, {{"experiment", "janson_clt"}}), std::invalid_argument);
  EXPECT_THROW(default_config("nope"), std::invalid_argument);
  EXPECT_THROW(parse_config_file("/nonexistent/config"), std::invalid_argument);
}

TEST(ReportTest, CsvQuotingAndSchema) {
  Report r;
  r.experiment = "x";
  r.generator = "g";
  r.master_seed = 5;
  ReportRow row;
  row.experiment = "x";
  row.metric = "a,b";
  row.measured = "say \"hi\"";
  r.rows.push_back(row);
  const std::string csv = to_csv(r);
  EXPECT_NE(csv.find("\"a,b\""), std::string::npos);
  EXPECT_NE(csv.find("\"say \"\"hi\"\"\""), std::string::npos);
  EXPECT_EQ(csv.rfind("schema,generator,master_seed,", 0), 0U);
  EXPECT_NE(to_json(r).find("\"master_seed\": \"5\""), std::string::npos);
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(NAN), "nan");
}

TEST(Experiments, CompleteLimit) {
  const auto r = run_experiment(small("complete_limit", {{"n", "3,4,10,100"}}));
  EXPECT_EQ(find_row(r, "P_exact", 3)->measured, "1/3");
  EXPECT_EQ(find_row(r, "P_exact", 4)->measured, "8/19");
  EXPECT_LT(std::stod(find_row(r, "P", 100)->deviation), std::stod(find_row(r, "P", 10)->deviation));
  for (const auto& row : r.rows) EXPECT_EQ(row.seed, r.master_seed);
}

TEST(Experiments, BipartiteLimit) {
  const auto r = run_experiment(small("bipartite_limit", {{"n", "1,2,5,10,25,50"}}));
  EXPECT_EQ(find_row(r, "P_exact", 2)->measured, "1/3");
  EXPECT_EQ(find_row(r, "P_exact", 4)->measured, "1/4");
  double prev = 1.0;
  for (int n : {10, 20, 50, 100}) {
    const double gap = std::stod(find_row(r, "P", n)->deviation);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
}

TEST(Experiments, GnpDenseRows) {
  const auto dense = run_experiment(small("gnp_dense", {{"n", "8"}, {"p", "1"}, {"trials", "2"}}));
  EXPECT_EQ(find_row(dense, "P", 8)->measured, format_double(spanning_probability(complete_graph(8)).to_double()));
  const auto sparse = run_experiment(small("gnp_dense", {{"n", "8"}, {"p", "0.05"}, {"trials", "3"}}));
  EXPECT_EQ(find_row(sparse, "P", 8)->flag, "disconnected");
  EXPECT_EQ(find_row(sparse, "P", 8)->measured, "0");
}

TEST(Experiments, PoissonRowsIncludeEveryK) {
  const auto r = run_experiment(small("poisson_ratios", {{"n", "30"}, {"trials", "1"}, {"k", "2"}}));
  ASSERT_NE(find_row(r, "ratio_0"), nullptr);
  EXPECT_EQ(find_row(r, "ratio_0")->measured, "1");
  EXPECT_NE(find_row(r, "ratio_1"), nullptr);
  EXPECT_NE(find_row(r, "ratio_2"), nullptr);
}

TEST(Experiments, JansonDropsDisconnected) {
  const auto r = run_experiment(small("janson_clt", {{"n", "12"}, {"p", "0.15"}, {"trials", "20"}}));
  const int dropped = std::stoi(find_row(r, "dropped")->measured);
  const int samples = std::stoi(find_row(r, "samples")->measured);
  EXPECT_EQ(dropped + samples, 20);
  EXPECT_GT(dropped, 0);
}

TEST(Experiments, WhpEventsAtPOne) {
  const auto r = run_experiment(small("whp_events", {{"n", "30"}, {"p", "1"}, {"trials", "2"}}));
  EXPECT_EQ(find_row(r, "max_degree_upper_frequency")->measured, "1");
  EXPECT_EQ(find_row(r, "min_degree_lower_frequency")->measured, "1");
  EXPECT_EQ(find_row(r, "max_degree_4np_frequency")->measured, "1");
  EXPECT_EQ(find_row(r, "giant_deficiency_median")->measured, "0");
}

TEST(Experiments, WhpEventsBeyondGraphCap) {
  const auto r = run_experiment(small("whp_events", {{"n", "1000"}, {"p", "log:3"}, {"trials", "2"}}));
  EXPECT_NE(find_row(r, "giant_deficiency_median"), nullptr);
  EXPECT_EQ(find_row(r, "ust_leaves_window_frequency"), nullptr);
}

TEST(Experiments, CounterexamplesColumns) {
  const auto r = run_experiment(default_config("counterexamples"));
  const auto* density = find_row(r, "clique_path_clique:3,2/density");
  ASSERT_NE(density, nullptr);
  EXPECT_EQ(density->measured, format_double(9.0 / 28.0));
  for (const auto& row : r.rows) {
    if (row.metric.ends_with("pendant_bound")) EXPECT_EQ(row.flag, "pass") << row.metric;
  }
}

TEST(Experiments, MeanOrder) {
  const auto r = run_experiment(small("mean_order", {{"n", "3,100"}, {"trials", "1"}}));
  EXPECT_EQ(find_row(r, "complete_n_minus_mean", 3)->measured, "2");
  EXPECT_LT(std::stod(find_row(r, "complete_n_minus_mean", 100)->deviation), 0.02);
}

TEST(Experiments, PairIdentitiesPass) {
  const auto r = run_experiment(small("pair_identities", {{"n", "5,6"}, {"trials", "3"}}));
  EXPECT_EQ(r.violations, 0);
  const auto* k3 = find_row(r, "complete:3/pair_1");
  ASSERT_NE(k3, nullptr);
  EXPECT_EQ(k3->measured, "6");
  EXPECT_EQ(k3->target, "6");
}

TEST(Experiments, ByteIdenticalAcrossWorkers) {
  for (const auto& [name, settings] : std::vector<std::pair<std::string, std::map<std::string, std::string>>>{
           {"gnp_dense", {{"n", "8,10"}, {"trials", "6"}}},
           {"janson_clt", {{"n", "30"}, {"trials", "12"}}},
           {"sparse_decay", {{"n", "8,10"}, {"trials", "4"}}},
           {"whp_events", {{"n", "40"}, {"trials", "5"}}},
           {"pair_identities", {{"n", "5"}, {"trials", "3"}}}}) {
    SCOPED_TRACE(name);
    auto one = small(name, settings);
    auto eight = one;
    eight.threads = 8;
    EXPECT_EQ(to_csv(run_experiment(one)), to_csv(run_experiment(eight)));
  }
}
