#include <gtest/gtest.h>

#include <cmath>

#include "onlinecolor/algorithms.hpp"
#include "onlinecolor/analysis.hpp"
#include "onlinecolor/errors.hpp"
#include "onlinecolor/instances.hpp"
#include "onlinecolor/rng.hpp"

using namespace onlinecolor;

namespace {

std::vector<RevealedNeighbor> colored(std::initializer_list<Color> colors) {
  std::vector<RevealedNeighbor> out;
  Vertex id = 100;
  for (Color c : colors) out.push_back({id++, c});
  return out;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  InstanceSpec spec;
  spec.family = Family::random_labeled_tree;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

TEST(FirstFitTest, SmallestFreeColor) {
  FirstFit ff;
  EXPECT_EQ(ff.color_next(0, {}, std::nullopt), 1u);
  EXPECT_EQ(ff.color_next(1, colored({1, 2, 4}), std::nullopt), 3u);
  EXPECT_EQ(ff.color_next(2, colored({2, 3}), std::nullopt), 1u);
}

TEST(FirstFitTest, PathOfFourThirdColor) {
  FirstFit ff;
  const Transcript t = run(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), ArrivalOrder::given({0, 1, 3, 2}), nullptr, ff);
  EXPECT_EQ(t.colors[2], 3u);
}

TEST(CBipTest, IsolatedVertexGetsOne) {
  CBip cbip;
  EXPECT_EQ(cbip.color_next(0, {}, std::nullopt), 1u);
}

TEST(CBipTest, MergingTwoComponentsForcesThirdColor) {
  // a-b, e-b, e-c with order (a, b, c, e); a=0 b=1 c=2 e=3.
  CBip cbip;
  const Graph g(4, {{0, 1}, {1, 3}, {2, 3}});
  const Transcript t = run(g, ArrivalOrder::given({0, 1, 2, 3}), nullptr, cbip);
  EXPECT_EQ(t.colors, (std::vector<Color>{1, 2, 1, 3}));
}

TEST(CBipTest, OppositeShoreWithOneColor) {
  // a-b, c-d, e-b, e-d with order (a, b, c, d, e).
  CBip cbip;
  const Graph g(5, {{0, 1}, {2, 3}, {1, 4}, {3, 4}});
  const Transcript t = run(g, ArrivalOrder::given({0, 1, 2, 3, 4}), nullptr, cbip);
  EXPECT_EQ(t.colors[4], 1u);
}

TEST(CBipTest, OddCycleRaisesNonBipartite) {
  for (std::size_t len : {3, 5, 7}) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < len; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % len)});
    const Graph cycle(len, edges);
    CBip cbip;
    EXPECT_THROW(run(cycle, ArrivalOrder::identity(len), nullptr, cbip), NonBipartiteError);
    const Bipartition fake{std::vector<std::uint8_t>(len, 0), std::vector<std::uint32_t>(len, 0), 1};
    const PredictionVector advice = predictions_from_delivered(fake, std::vector<std::uint8_t>(len, 1));
    AdviceCBip advice_cbip;
    EXPECT_THROW(run(cycle, ArrivalOrder::identity(len), &advice, advice_cbip), NonBipartiteError);
  }
}

TEST(CBipTest, NeverRaisesOnBipartiteInput) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    InstanceSpec spec;
    spec.family = Family::random_bipartite;
    spec.n = 60;
    spec.edge_probability = 0.1;
    spec.seed = seed;
    const Graph g = generate(spec);
    CBip cbip;
    EXPECT_NO_THROW(run(g, sample_order(60, seed), nullptr, cbip));
  }
}

TEST(AdviceFirstFitTest, FollowsAdviceOnlyWhenIsolated) {
  AdviceFirstFit alg;
  EXPECT_EQ(alg.color_next(0, {}, true), 1u);
  EXPECT_EQ(alg.color_next(1, {}, false), 2u);
  EXPECT_EQ(alg.color_next(2, colored({1, 2}), false), 3u);
  EXPECT_THROW(alg.color_next(3, {}, std::nullopt), ConfigurationError);
}

TEST(AdviceFirstFitTest, CorrectAdviceColorsTreesOptimally) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 150;
    const Graph tree = random_tree(n, seed);
    const PredictionVector predictions = make_predictions(require_bipartition(tree));
    AdviceFirstFit alg;
    EXPECT_EQ(run(tree, sample_order(n, seed), &predictions, alg).colors_used, 2u);
  }
}

TEST(AdviceCBipTest, IsolatedFollowsAdvice) {
  AdviceCBip alg;
  EXPECT_EQ(alg.color_next(0, {}, false), 2u);
  EXPECT_EQ(alg.color_next(1, {}, true), 1u);
}

TEST(AdviceCBipTest, CorrectAdviceAvoidsTheCollision) {
  // The CBip example above with a and c advised correctly.
  const Graph g(4, {{0, 1}, {1, 3}, {2, 3}});
  const PredictionVector predictions = make_predictions(require_bipartition(g));
  AdviceCBip alg;
  const Transcript t = run(g, ArrivalOrder::given({0, 1, 2, 3}), &predictions, alg);
  EXPECT_LE(t.colors_used, 2u);
}

TEST(AdviceCBipTest, CorrectAdviceTwoColorsBipartiteGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    InstanceSpec spec;
    spec.family = Family::random_bipartite;
    spec.n = 80;
    spec.edge_probability = 0.02 * static_cast<double>(1 + seed % 10);
    spec.seed = seed;
    const Graph g = generate(spec);
    const PredictionVector predictions = make_predictions(require_bipartition(g));
    AdviceCBip alg;
    EXPECT_LE(run(g, sample_order(80, seed), &predictions, alg).colors_used, 2u);
  }
}

TEST(ParityFirstFitTest, ParityRule) {
  ParityFirstFit alg;
  EXPECT_EQ(alg.color_next(0, {}, true), 1u);
  EXPECT_EQ(alg.color_next(1, {}, false), 2u);
  EXPECT_EQ(alg.color_next(2, colored({1}), true), 3u);
  EXPECT_EQ(alg.color_next(3, colored({2, 4}), false), 6u);
}

TEST(ParityFirstFitTest, CorrectAdviceUsesTwoColorsOnTrees) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 200;
    const Graph tree = random_tree(n, seed);
    const PredictionVector predictions = make_predictions(require_bipartition(tree));
    ParityFirstFit alg;
    EXPECT_LE(run(tree, sample_order(n, seed), &predictions, alg).colors_used, 2u);
  }
}

TEST(FirstFitBound, AllOrdersOfSmallTrees) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& tree : nonisomorphic_trees(n)) {
      const ExactDistribution d = enumerate_orders(tree, "first-fit", nullptr);
      EXPECT_LE(d.max_colors(), std::log2(static_cast<double>(n)) + 1 + 1e-9);
    }
  }
}

TEST(FirstFitBound, SampledOrdersOfLargeTrees) {
  FirstFit ff;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph tree = random_tree(5000, seed);
    const double bound = std::log2(5000.0) + 1;
    EXPECT_LE(run(tree, sample_order(5000, seed), nullptr, ff, RecordMode::colors_only).colors_used, bound);
    EXPECT_LE(run(tree, structured_order(tree, OrderPattern::reverse_bfs), nullptr, ff, RecordMode::colors_only)
                  .colors_used,
              bound);
  }
}

TEST(AdviceBounds, ErrorAndSizeBoundsOnRandomTrees) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(1000);
    const Graph tree = random_tree(n, rng.next());
    const std::size_t k = rng.below(n + 1);
    const PredictionVector p = make_predictions_random(require_bipartition(tree), k, rng.next());
    const ArrivalOrder order = sample_order(n, rng.next());
    AdviceFirstFit aff;
    AdviceCBip acbip;
    CBip cbip;
    const Color x1 = run(tree, order, &p, aff, RecordMode::colors_only).colors_used;
    const Color x2 = run(tree, order, &p, acbip, RecordMode::colors_only).colors_used;
    const Color x3 = run(tree, order, nullptr, cbip, RecordMode::colors_only).colors_used;
    const double dn = static_cast<double>(n);
    const double dk = static_cast<double>(p.k_min);
    EXPECT_LE(x1, std::log2(dn) + 3 - std::log2(3.0) + 1e-9);
    EXPECT_LE(x2, 2 * std::log2(dn + 2) + 3 - 2 * std::log2(5.0) + 1e-9);
    EXPECT_LE(x3, 2 * std::log2(dn + 2) - 2 + 1e-9);
    if (p.k_min >= 1) {
      EXPECT_LE(x1, std::log2(dk) + 3 + 1e-9);
      EXPECT_LE(x2, 2 * std::log2(dk) + 4 + 1e-9);
    } else {
      EXPECT_EQ(x1, 2u);
      EXPECT_LE(x2, 2u);
    }
  }
}

TEST(ShoreStateTest, TracksParityAcrossMerges) {
  ShoreState s;
  for (Vertex v = 0; v < 4; ++v) s.add_vertex(v);
  s.join_opposite(0, 1);
  s.join_opposite(2, 3);
  s.join_opposite(1, 2);
  EXPECT_EQ(s.find(0).root, s.find(3).root);
  EXPECT_NE(s.find(0).parity, s.find(3).parity);
  EXPECT_EQ(s.find(0).parity, s.find(2).parity);
  EXPECT_THROW(s.join_opposite(0, 2), NonBipartiteError);
  s.add_color(0, 1);
  s.add_color(3, 4);
  EXPECT_TRUE(s.opposite_colors(2).contains(4));
  EXPECT_TRUE(s.own_colors(2).contains(1));
  EXPECT_EQ(s.opposite_colors(1).smallest_absent(), 2u);
}

TEST(ColorSetTest, SmallestAbsent) {
  ColorSet set;
  EXPECT_EQ(set.smallest_absent(), 1u);
  for (Color c : {1, 2, 3, 5, 64, 65}) set.insert(c);
  EXPECT_EQ(set.smallest_absent(), 4u);
  EXPECT_TRUE(set.contains(65));
  EXPECT_FALSE(set.contains(66));
  EXPECT_EQ(set.size(), 6u);
}

TEST(Registry, NamesAndFactory) {
  EXPECT_EQ(algorithm_names().size(), 5u);
  for (auto name : algorithm_names()) {
    EXPECT_EQ(make_colorer(name)->name(), name);
    EXPECT_EQ(make_colorer(name)->uses_advice(), algorithm_uses_advice(name));
  }
  EXPECT_THROW(make_colorer("greedy"), ParameterError);
}
