#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "onlinecolor/algorithms.hpp"
#include "onlinecolor/errors.hpp"
#include "onlinecolor/instances.hpp"
#include "onlinecolor/reveal.hpp"

using namespace onlinecolor;

namespace {

Graph random_tree(std::size_t n, std::uint64_t seed) {
  InstanceSpec spec;
  spec.family = Family::random_labeled_tree;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

// Answers with the color of its first revealed neighbor, which is never legal.
class Echo final : public OnlineColorer {
 public:
  std::string_view name() const override { return "echo"; }
  bool uses_advice() const override { return false; }
  void reset() override {}
  Color color_next(Vertex, std::span<const RevealedNeighbor> neighbors, std::optional<bool>) override {
    return neighbors.empty() ? 1 : neighbors.front().color;
  }
};

}  // namespace

TEST(SampleOrder, SingleVertex) {
  EXPECT_EQ(sample_order(1, 12345).order, std::vector<Vertex>{0});
}

TEST(SampleOrder, DeterministicInSeed) {
  EXPECT_EQ(sample_order(10, 42).order, sample_order(10, 42).order);
  EXPECT_NE(sample_order(10, 42).order, sample_order(10, 43).order);
  EXPECT_EQ(sample_order(10, 42).seed, std::optional<std::uint64_t>(42));
}

TEST(SampleOrder, UniformOverPermutationsOfThree) {
  constexpr int kSamples = 60000;
  std::map<std::vector<Vertex>, int> counts;
  for (int i = 0; i < kSamples; ++i) ++counts[sample_order(3, static_cast<std::uint64_t>(i) * 7919 + 1).order];
  ASSERT_EQ(counts.size(), 6u);
  const double p = 1.0 / 6;
  const double sigma = std::sqrt(kSamples * p * (1 - p));
  double chi_square = 0;
  for (const auto& [order, count] : counts) {
    EXPECT_LE(std::abs(count - kSamples * p), 5 * sigma);
    chi_square += (count - kSamples * p) * (count - kSamples * p) / (kSamples * p);
  }
  // 5 degrees of freedom; 0.1% upper quantile is 20.5.
  EXPECT_LT(chi_square, 20.5);
}

TEST(ValidateOrder, RejectsNonPermutations) {
  EXPECT_THROW(validate_order(std::vector<Vertex>{0, 0, 1}, 3), ParameterError);
  EXPECT_THROW(validate_order(std::vector<Vertex>{0, 1}, 3), ParameterError);
  EXPECT_THROW(validate_order(std::vector<Vertex>{0, 1, 3}, 3), ParameterError);
  EXPECT_NO_THROW(validate_order(std::vector<Vertex>{2, 0, 1}, 3));
}

TEST(StructuredOrder, ArePermutations) {
  const Graph tree = random_tree(60, 5);
  for (auto pattern : {OrderPattern::identity, OrderPattern::bfs, OrderPattern::reverse_bfs,
                       OrderPattern::dfs_preorder, OrderPattern::dfs_postorder}) {
    EXPECT_NO_THROW(validate_order(structured_order(tree, pattern).order, 60));
  }
}

TEST(Predictions, NoneDeliversTruth) {
  const Bipartition sides = require_bipartition(Graph(3, {{0, 1}, {1, 2}}));
  const PredictionVector p = make_predictions(sides);
  EXPECT_EQ(p.delivered, p.truth);
  EXPECT_EQ(p.k, 0u);
  EXPECT_EQ(p.k_min, 0u);
}

TEST(Predictions, ExplicitSingleError) {
  const Bipartition sides = require_bipartition(Graph(2, {{0, 1}}));
  const std::vector<Vertex> errors{0};
  const PredictionVector p = make_predictions_explicit(sides, errors);
  EXPECT_EQ(p.truth, (std::vector<std::uint8_t>{1, 0}));
  EXPECT_EQ(p.delivered, (std::vector<std::uint8_t>{0, 0}));
  EXPECT_EQ(p.k, 1u);
  EXPECT_EQ(p.k_min, 1u);
}

TEST(Predictions, FlippingAWholeComponentCostsNothingInKMin) {
  const Bipartition sides = require_bipartition(Graph(3, {{0, 1}, {1, 2}}));
  const std::vector<Vertex> errors{0, 1, 2};
  const PredictionVector p = make_predictions_explicit(sides, errors);
  EXPECT_EQ(p.k, 3u);
  EXPECT_EQ(p.k_min, 0u);
}

TEST(Predictions, RandomFlipsExactlyK) {
  const Graph tree = random_tree(100, 3);
  const Bipartition sides = require_bipartition(tree);
  for (std::size_t k : {0, 1, 7, 50, 100}) {
    const PredictionVector p = make_predictions_random(sides, k, 11);
    EXPECT_EQ(p.k, k);
    EXPECT_EQ(p.error_set.size(), k);
    EXPECT_LE(p.k_min, p.k);
    EXPECT_LE(p.k_min, 50u);
    std::size_t differing = 0;
    for (std::size_t v = 0; v < 100; ++v) differing += p.delivered[v] != p.truth[v];
    EXPECT_EQ(differing, k);
  }
  EXPECT_THROW(make_predictions_random(sides, 101, 1), ParameterError);
  const std::vector<Vertex> out_of_range{100};
  EXPECT_THROW(make_predictions_explicit(sides, out_of_range), ParameterError);
}

TEST(Predictions, KMinIgnoresPerComponentFlip) {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const Bipartition sides = require_bipartition(g);
  const std::vector<Vertex> errors{0};
  const PredictionVector a = make_predictions_explicit(sides, errors);
  const std::vector<Vertex> flipped{1, 2};
  const PredictionVector b = make_predictions_explicit(sides, flipped);
  EXPECT_EQ(a.k_min, 1u);
  EXPECT_EQ(b.k_min, 1u);
}

TEST(Run, SingleEdge) {
  FirstFit ff;
  const Transcript t = run(Graph(2, {{0, 1}}), ArrivalOrder::given({0, 1}), nullptr, ff);
  EXPECT_EQ(t.colors, (std::vector<Color>{1, 2}));
  EXPECT_EQ(t.colors_used, 2u);
}

TEST(Run, PathOfFourHandTrace) {
  // a-b-c-d as 0-1-2-3, order (a, b, d, c).
  FirstFit ff;
  const Transcript t = run(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), ArrivalOrder::given({0, 1, 3, 2}), nullptr, ff);
  EXPECT_EQ(t.colors, (std::vector<Color>{1, 2, 3, 1}));
  EXPECT_EQ(t.colors_used, 3u);
}

TEST(Run, EchoingAlgorithmIsStoppedAtFirstOffendingStep) {
  Echo echo;
  const Graph g(3, {{0, 1}, {1, 2}});
  try {
    run(g, ArrivalOrder::given({2, 0, 1}), nullptr, echo);
    FAIL() << "expected a protocol violation";
  } catch (const ProtocolViolation& violation) {
    EXPECT_EQ(violation.step(), 2u);
  }
}

TEST(Run, RevealSessionRejectsBadCalls) {
  FirstFit ff;
  RevealSession session(ff);
  session.reveal(0, {}, std::nullopt);
  EXPECT_THROW(session.reveal(0, {}, std::nullopt), ProtocolViolation);
  const std::vector<Vertex> unknown{7};
  EXPECT_THROW(session.reveal(1, unknown, std::nullopt), ProtocolViolation);
}

TEST(Run, AdviceAlgorithmsNeedPredictions) {
  AdviceFirstFit alg;
  EXPECT_THROW(run(Graph(2, {{0, 1}}), ArrivalOrder::identity(2), nullptr, alg), ConfigurationError);
}

TEST(Run, TranscriptMatchesInducedSubgraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph tree = random_tree(80, seed);
    const ArrivalOrder order = sample_order(80, seed + 1000);
    const PredictionVector predictions = make_predictions_random(require_bipartition(tree), 9, seed);
    for (std::string_view name : algorithm_names()) {
      auto alg = make_colorer(name);
      const Transcript t = run(tree, order, alg->uses_advice() ? &predictions : nullptr, *alg);
      ASSERT_TRUE(is_proper_coloring(tree, t.colors));
      std::vector<bool> seen(80, false);
      Color top = 0;
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& step = t.steps[i];
        EXPECT_EQ(step.vertex, order.order[i]);
        std::vector<Vertex> expected;
        for (Vertex u : tree.neighbors(step.vertex)) {
          if (seen[u]) expected.push_back(u);
        }
        std::vector<Vertex> got = step.revealed_neighbors;
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
        seen[step.vertex] = true;
        top = std::max(top, step.color);
      }
      EXPECT_EQ(t.colors_used, top);
      EXPECT_LE(t.distinct_colors(), t.colors_used);
      if (name == "first-fit" || name == "advice-first-fit") EXPECT_EQ(t.distinct_colors(), t.colors_used);
      const Transcript again = run(tree, order, alg->uses_advice() ? &predictions : nullptr, *alg);
      EXPECT_EQ(transcript_json(again).dump(), transcript_json(t).dump());
    }
  }
}

TEST(Run, TranscriptJsonFieldOrder) {
  FirstFit ff;
  const Graph g(2, {{0, 1}});
  const auto json = transcript_json(run(g, sample_order(2, 5), nullptr, ff));
  std::vector<std::string> keys;
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"instance_hash", "seeds", "algorithm", "steps", "X", "k", "k_min"}));
  EXPECT_EQ(json["X"], 2);
  EXPECT_EQ(json["seeds"]["order"], 5);
  EXPECT_EQ(json["instance_hash"], hex64(g.content_hash()));
}
