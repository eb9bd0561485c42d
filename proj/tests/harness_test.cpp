#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <fstream>

#include "onlinecolor/analysis.hpp"
#include "onlinecolor/errors.hpp"
#include "onlinecolor/harness.hpp"
#include "onlinecolor/mutants.hpp"

using namespace onlinecolor;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  InstanceSpec tree;
  tree.family = Family::random_labeled_tree;
  tree.n = 300;
  InstanceSpec bip;
  bip.family = Family::random_bipartite;
  bip.n = 60;
  bip.edge_probability = 0.1;
  config.instances = {tree, bip};
  config.algorithms = {"first-fit", "cbip", "advice-cbip"};
  config.k_values = {0, 3, 20};
  config.trials = 60;
  config.seed = 17;
  return config;
}

}  // namespace

TEST(Experiment, CellsAreConsistent) {
  const ExperimentReport report = run_experiment(small_config());
  ASSERT_EQ(report.cells.size(), 2u * (1 + 1 + 3));
  EXPECT_FALSE(report.any_violation);
  for (const auto& cell : report.cells) {
    std::uint64_t total = 0;
    for (const auto& [x, count] : cell.histogram) total += count;
    EXPECT_EQ(total, cell.trials);
    EXPECT_EQ(cell.trials, 60u);
    EXPECT_LE(cell.mean, cell.max);
    EXPECT_LE(cell.min, cell.median);
    EXPECT_LE(cell.median, cell.p90);
    EXPECT_LE(cell.p90, cell.p99);
    EXPECT_LE(cell.p99, cell.max);
    EXPECT_EQ(cell.tail.size(), cell.max);
    EXPECT_DOUBLE_EQ(cell.tail.front(), 1.0);
    // First-fit has no bound on general bipartite graphs.
    const bool bounded = !(cell.algorithm == "first-fit" && cell.instance.family == Family::random_bipartite);
    EXPECT_EQ(cell.bounds.empty(), !bounded) << cell.label;
    for (const auto& bound : cell.bounds) EXPECT_GE(bound.margin, 0) << cell.label << " " << bound.name;
    if (cell.algorithm == "advice-cbip" && cell.k == 0u) EXPECT_LE(cell.max, 2u);
    if (cell.k) EXPECT_LE(cell.k_min_max, *cell.k);
  }
}

TEST(Experiment, DeterministicAcrossRunsAndThreads) {
  ExperimentConfig config = small_config();
  const std::string a = report_json(run_experiment(config), false).dump();
  const std::string b = report_json(run_experiment(config), false).dump();
  config.jobs = 3;
  const std::string c = report_json(run_experiment(config), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  config.seed = 18;
  EXPECT_NE(a, report_json(run_experiment(config), false).dump());
}

TEST(Experiment, CsvHasStableColumns) {
  const std::string csv = report_csv(run_experiment(small_config()));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "cell_id,n,k,algorithm,trials,mean,max,bound,margin");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
}

TEST(Experiment, FlagsViolationsInsteadOfThrowing) {
  ExperimentConfig config = small_config();
  config.algorithms = {"cbip"};
  const ExperimentReport report = run_experiment(config, mutated_factory("cbip"));
  EXPECT_TRUE(report.any_violation);
}

TEST(Experiment, AdviceOnlyCellsGetErrorLevels) {
  ExperimentConfig config = small_config();
  config.k_values = {400};
  EXPECT_THROW(run_experiment(config), ParameterError);
}

TEST(Experiment, MonteCarloMatchesExactOracle) {
  // Every vertex count with a few tree shapes, checked against enumeration.
  std::size_t cells = 0;
  std::size_t within = 0;
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const Graph& tree : nonisomorphic_trees(n)) {
      const ExactDistribution exact = enumerate_orders(tree, "first-fit", nullptr);
      const double mean = to_double(exact.expectation());
      double second = 0;
      for (const auto& [x, count] : exact.counts) second += to_double(exact.probability(x)) * x * x;
      const double sigma = std::sqrt((second - mean * mean) / 4000);

      ExperimentConfig config;
      InstanceSpec spec;
      spec.family = Family::from_file;
      // Write the tree so the harness sees a fixed instance.
      const std::string path = ::testing::TempDir() + "oracle_tree.txt";
      {
        std::ofstream out(path);
        out << to_edge_list(tree);
      }
      spec.path = path;
      config.instances = {spec};
      config.algorithms = {"first-fit"};
      config.trials = 4000;
      config.seed = n * 1000 + cells;
      const ExperimentReport report = run_experiment(config);
      ++cells;
      if (sigma == 0 ? report.cells.front().mean == mean
                     : std::abs(report.cells.front().mean - mean) <= 4 * sigma) {
        ++within;
      }
    }
  }
  EXPECT_GE(static_cast<double>(within), 0.99 * static_cast<double>(cells));
}

TEST(Config, JsonRoundTripAndValidation) {
  const ExperimentConfig config = small_config();
  const ExperimentConfig back = config_from_json(nlohmann::json::parse(config_json(config).dump()));
  EXPECT_EQ(config_json(back).dump(), config_json(config).dump());
  auto missing_seed = nlohmann::json::parse(config_json(config).dump());
  missing_seed.erase("seed");
  EXPECT_THROW(config_from_json(missing_seed), ParameterError);
  auto bad_algorithm = nlohmann::json::parse(config_json(config).dump());
  bad_algorithm["algorithms"] = {"greedy"};
  EXPECT_THROW(config_from_json(bad_algorithm), ParameterError);
}

TEST(Wilson, Limits) {
  const auto [lo0, hi0] = wilson_interval(0, 1000, kZ999);
  EXPECT_EQ(lo0, 0.0);
  EXPECT_GT(hi0, 0.0);
  EXPECT_LT(hi0, 0.02);
  const auto [lo, hi] = wilson_interval(500, 1000, kZ999);
  EXPECT_LT(lo, 0.5);
  EXPECT_GT(hi, 0.5);
  EXPECT_NEAR(hi - 0.5, 0.5 - lo, 1e-12);
}

TEST(TailCheck, FirstFitOnRandomTree) {
  InstanceSpec spec;
  spec.family = Family::random_labeled_tree;
  spec.n = 100;
  spec.seed = 1;
  const TailReport report = tail_check(generate(spec), "first-fit", nullptr, 2, 9, 20000, 5);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.rows.front().vacuous);  // n^2 / 2 >= 1
  const TailRow& nine = report.rows.back();
  EXPECT_EQ(nine.ell, 9u);
  EXPECT_NEAR(*nine.bound, 0.027557, 1e-6);
  EXPECT_LE(nine.frequency, *nine.bound);
}

TEST(TailCheck, ParityBoundIsVacuousForSmallEll) {
  InstanceSpec spec;
  spec.family = Family::random_labeled_tree;
  spec.n = 50;
  spec.seed = 2;
  const Graph tree = generate(spec);
  const PredictionVector p = make_predictions_random(require_bipartition(tree), 4, 3);
  const TailReport report = tail_check(tree, "parity-first-fit", &p, 7, 7, 200, 9);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows.front().exact_bound, "16/1");
  EXPECT_TRUE(report.rows.front().vacuous);
  EXPECT_TRUE(report.pass);
}

TEST(Sweep, ErrorCurves) {
  InstanceSpec spec;
  spec.family = Family::random_labeled_tree;
  spec.n = 500;
  const SweepReport aff = sweep_errors(spec, "advice-first-fit", {0, 1, 4, 64}, 50, 3);
  EXPECT_FALSE(aff.any_violation);
  ASSERT_EQ(aff.rows.size(), 4u);
  EXPECT_EQ(aff.rows[0].max, 2u);
  EXPECT_DOUBLE_EQ(*aff.rows[1].bound, 3.0);
  EXPECT_LE(aff.rows[1].max, 3u);

  const SweepReport parity = sweep_errors(spec, "parity-first-fit", {0, 2, 8}, 50, 3);
  EXPECT_EQ(parity.rows[0].max, 2u);
  EXPECT_FALSE(parity.rows[1].bound);
  EXPECT_TRUE(parity.rows[2].bound);

  InstanceSpec bip;
  bip.family = Family::random_bipartite;
  bip.n = 200;
  bip.edge_probability = 0.05;
  const SweepReport acbip = sweep_errors(bip, "advice-cbip", {2}, 50, 3);
  EXPECT_DOUBLE_EQ(*acbip.rows[0].bound, 6.0);
  EXPECT_LE(acbip.rows[0].max, 6u);
  EXPECT_THROW(sweep_errors(spec, "first-fit", {1}, 5, 1), ParameterError);
}
