#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "onlinecolor/errors.hpp"
#include "onlinecolor/instances.hpp"
#include "onlinecolor/rng.hpp"

using namespace onlinecolor;

namespace {

// Independent encoder: repeatedly remove the smallest leaf, record its neighbor.
std::vector<Vertex> prufer_encode(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Vertex> code;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[leaf] = true;
    for (Vertex u : tree.neighbors(leaf)) {
      if (removed[u]) continue;
      code.push_back(u);
      if (--degree[u] == 1) leaves.insert(u);
    }
  }
  return code;
}

std::vector<Edge> sorted_edges(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return edges;
}

}  // namespace

TEST(Generate, PathOfTwo) {
  InstanceSpec spec;
  spec.family = Family::path;
  spec.n = 2;
  EXPECT_EQ(sorted_edges(generate(spec)), (std::vector<Edge>{{0, 1}}));
}

TEST(Generate, StarOfFour) {
  InstanceSpec spec;
  spec.family = Family::star;
  spec.n = 4;
  EXPECT_EQ(sorted_edges(generate(spec)), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(Generate, CompleteBinaryTree) {
  InstanceSpec spec;
  spec.family = Family::complete_binary_tree;
  spec.n = 7;
  const Graph g = generate(spec);
  EXPECT_TRUE(g.is_tree());
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(1), 3u);
  EXPECT_EQ(g.degree(6), 1u);
  spec.n = 6;
  EXPECT_THROW(generate(spec), ParameterError);
}

TEST(Generate, Spider) {
  InstanceSpec spec;
  spec.family = Family::spider;
  spec.n = 10;
  spec.legs = 3;
  const Graph g = generate(spec);
  EXPECT_TRUE(g.is_tree());
  EXPECT_EQ(g.degree(0), 3u);
  spec.legs = 4;
  EXPECT_THROW(generate(spec), ParameterError);
}

TEST(Generate, RandomBipartiteUsesFixedShores) {
  InstanceSpec spec;
  spec.family = Family::random_bipartite;
  spec.n = 9;
  spec.edge_probability = 1.0;
  spec.seed = 4;
  const Graph g = generate(spec);
  EXPECT_EQ(g.edge_count(), 5u * 4u);
  for (const Edge& e : g.edges()) {
    EXPECT_LT(e.u, 5u);
    EXPECT_GE(e.v, 5u);
  }
}

TEST(Generate, SameSeedSameInstance) {
  for (Family family : {Family::random_labeled_tree, Family::random_bipartite}) {
    InstanceSpec spec;
    spec.family = family;
    spec.n = 50;
    spec.edge_probability = 0.2;
    spec.seed = 77;
    EXPECT_EQ(to_edge_list(generate(spec)), to_edge_list(generate(spec)));
    InstanceSpec other = spec;
    other.seed = 78;
    EXPECT_NE(to_edge_list(generate(spec)), to_edge_list(generate(other)));
  }
}

TEST(Generate, TreesAreValidTrees) {
  for (Family family : {Family::path, Family::star, Family::random_labeled_tree}) {
    for (std::size_t n : {1, 2, 3, 17, 256}) {
      InstanceSpec spec;
      spec.family = family;
      spec.n = n;
      spec.seed = n;
      const Graph g = generate(spec);
      EXPECT_EQ(g.edge_count(), n - 1);
      EXPECT_TRUE(g.is_connected());
      EXPECT_TRUE(validate(n, g.edges()).ok());
    }
  }
}

TEST(Prufer, EmptySequenceIsSingleEdge) {
  EXPECT_EQ(sorted_edges(prufer_decode({}, 2)), (std::vector<Edge>{{0, 1}}));
}

TEST(Prufer, RepeatedLabelGivesStar) {
  const std::vector<Vertex> zeros{0, 0};
  EXPECT_EQ(sorted_edges(prufer_decode(zeros, 4)), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
  // One-based (1,1) over {1..4} is (0,0) after shifting labels down.
  const std::vector<Vertex> ones{1, 1};
  EXPECT_EQ(sorted_edges(prufer_decode(ones, 4)), (std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(Prufer, RejectsBadInput) {
  const std::vector<Vertex> bad{5};
  EXPECT_THROW(prufer_decode(bad, 3), ParameterError);
  const std::vector<Vertex> short_sequence{0};
  EXPECT_THROW(prufer_decode(short_sequence, 4), ParameterError);
}

TEST(Prufer, DecodeEncodeRoundTrip) {
  Rng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 3 + rng.below(40);
    const auto sequence = random_prufer_sequence(n, rng.next());
    ASSERT_EQ(sequence.size(), n - 2);
    const Graph tree = prufer_decode(sequence, n);
    ASSERT_TRUE(tree.is_tree());
    ASSERT_EQ(prufer_encode(tree), sequence);
  }
}

TEST(Prufer, UniformOverLabeledTreesOnFour) {
  constexpr int kSamples = 16000;
  std::map<std::string, int> counts;
  for (int i = 0; i < kSamples; ++i) {
    InstanceSpec spec;
    spec.family = Family::random_labeled_tree;
    spec.n = 4;
    spec.seed = split_seed(99, static_cast<std::uint64_t>(i), 0);
    ++counts[to_edge_list(generate(spec))];
  }
  ASSERT_EQ(counts.size(), 16u);
  const double p = 1.0 / 16;
  const double sigma = std::sqrt(kSamples * p * (1 - p));
  for (const auto& [tree, count] : counts) EXPECT_LE(std::abs(count - kSamples * p), 5 * sigma) << tree;
}

TEST(Families, Names) {
  for (Family family : {Family::path, Family::star, Family::complete_binary_tree, Family::spider,
                        Family::random_labeled_tree, Family::random_bipartite, Family::from_file}) {
    EXPECT_EQ(parse_family(family_name(family)), family);
  }
  EXPECT_THROW(parse_family("cycle"), ParameterError);
}
