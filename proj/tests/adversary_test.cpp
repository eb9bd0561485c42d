#include <gtest/gtest.h>

#include "onlinecolor/adversary.hpp"
#include "onlinecolor/algorithms.hpp"
#include "onlinecolor/errors.hpp"
#include "onlinecolor/mutants.hpp"

using namespace onlinecolor;

namespace {

// Colors isolated vertices against their advice: advice 1 -> 2, advice 0 -> 1.
class Contrarian final : public OnlineColorer {
 public:
  std::string_view name() const override { return "contrarian"; }
  bool uses_advice() const override { return true; }
  void reset() override {}
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override {
    if (neighbors.empty()) return *advice ? 2 : 1;
    return inner_.color_next(v, neighbors, advice);
  }

 private:
  FirstFit inner_;
};

// Follows the advice for the first two isolated vertices, then swaps the labels.
class Fickle final : public OnlineColorer {
 public:
  std::string_view name() const override { return "fickle"; }
  bool uses_advice() const override { return true; }
  void reset() override { calls_ = 0; }
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override {
    if (neighbors.empty()) return (*advice != (++calls_ > 2)) ? 1 : 2;
    return inner_.color_next(v, neighbors, advice);
  }

 private:
  std::size_t calls_ = 0;
  FirstFit inner_;
};

void expect_witness(const AdversaryOutcome& outcome) {
  EXPECT_EQ(outcome.verdict, AdversaryOutcome::Verdict::inconsistency_witness);
  EXPECT_TRUE(outcome.graph.is_tree());
  EXPECT_EQ(outcome.k_min, 0u);
  EXPECT_GT(outcome.colors_used(), 2u);
}

}  // namespace

TEST(ForcingTreeSize, Formula) {
  EXPECT_EQ(forcing_tree_size(3), 3u);
  EXPECT_EQ(forcing_tree_size(4), 6u);
  EXPECT_EQ(forcing_tree_size(5), 12u);
  EXPECT_EQ(forcing_tree_size(9), 192u);
  EXPECT_THROW(forcing_tree_size(2), ParameterError);
}

TEST(ProbeIsolated, AdviceFirstFitAnswersOneAndTwo) {
  AdviceFirstFit alg;
  const ProbeResult result = probe_isolated(alg, 1, 1);
  ASSERT_TRUE(result.colors);
  EXPECT_EQ(*result.colors, std::make_pair(Color{2}, Color{1}));
  EXPECT_FALSE(result.witness);
}

TEST(ProbeIsolated, SwappedLabelsAreStillConsistent) {
  Contrarian alg;
  const ProbeResult result = probe_isolated(alg, 1, 1);
  ASSERT_TRUE(result.colors);
  EXPECT_EQ(*result.colors, std::make_pair(Color{1}, Color{2}));
}

TEST(ProbeIsolated, SameColorForBothGroupsTriggersTheGadget) {
  auto alg = make_mutant("advice-first-fit");
  const ProbeResult result = probe_isolated(*alg, 1, 1);
  EXPECT_FALSE(result.colors);
  ASSERT_TRUE(result.witness);
  expect_witness(*result.witness);
}

TEST(Force, AdviceFirstFitBaseCase) {
  AdviceFirstFit alg;
  const AdversaryOutcome outcome = force(3, alg);
  EXPECT_EQ(outcome.verdict, AdversaryOutcome::Verdict::forced);
  EXPECT_EQ(outcome.vertices_used, 3u);
  EXPECT_EQ(outcome.colors_used(), 3u);
}

TEST(Force, AdviceFirstFitFive) {
  AdviceFirstFit alg;
  const AdversaryOutcome outcome = force(5, alg);
  EXPECT_EQ(outcome.verdict, AdversaryOutcome::Verdict::forced);
  EXPECT_EQ(outcome.vertices_used, 12u);
  EXPECT_EQ(outcome.colors_used(), 5u);
}

TEST(Force, AdviceCBipFour) {
  AdviceCBip alg;
  const AdversaryOutcome outcome = force(4, alg);
  EXPECT_EQ(outcome.verdict, AdversaryOutcome::Verdict::forced);
  EXPECT_EQ(outcome.vertices_used, 6u);
  EXPECT_GE(outcome.colors_used(), 4u);
}

TEST(Force, BothAlgorithmsAcrossLevels) {
  for (std::string_view name : {"advice-first-fit", "advice-cbip"}) {
    for (std::size_t ell = 3; ell <= 9; ++ell) {
      auto alg = make_colorer(name);
      const AdversaryOutcome outcome = force(ell, *alg);
      EXPECT_EQ(outcome.verdict, AdversaryOutcome::Verdict::forced);
      EXPECT_EQ(outcome.vertices_used, forcing_tree_size(ell));
      EXPECT_EQ(outcome.graph.vertex_count(), forcing_tree_size(ell));
      EXPECT_TRUE(outcome.graph.is_tree());
      EXPECT_GE(outcome.colors_used(), ell);
      if (name == "advice-first-fit") EXPECT_EQ(outcome.colors_used(), ell);
      EXPECT_TRUE(is_proper_coloring(outcome.graph, outcome.transcript.colors));
    }
  }
}

TEST(Force, InconsistentAlgorithmsYieldWitnesses) {
  for (std::size_t ell : {3, 6}) {
    auto blind = make_mutant("advice-cbip");
    expect_witness(force(ell, *blind));
  }
  Fickle fickle;
  EXPECT_EQ(force(3, fickle).verdict, AdversaryOutcome::Verdict::forced);
  for (std::size_t ell : {4, 7}) expect_witness(force(ell, fickle));
}

TEST(Force, ContrarianIsForcedToo) {
  Contrarian alg;
  const AdversaryOutcome outcome = force(6, alg);
  EXPECT_EQ(outcome.verdict, AdversaryOutcome::Verdict::forced);
  EXPECT_GE(outcome.colors_used(), 6u);
}

TEST(Force, JsonNamesVerdict) {
  AdviceFirstFit alg;
  const auto json = adversary_json(force(4, alg));
  EXPECT_EQ(json["verdict"], "forced");
  EXPECT_EQ(json["vertices"], 6);
}
