#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "onlinecolor/algorithms.hpp"
#include "onlinecolor/bounds.hpp"
#include "onlinecolor/graph.hpp"
#include "onlinecolor/reveal.hpp"

namespace onlinecolor {

/// Exact distribution of X over all n! arrival orders.
struct ExactDistribution {
  std::uint64_t instance_hash = 0;
  std::string algorithm;
  std::size_t n = 0;
  /// n!
  std::uint64_t total_orders = 0;
  /// X -> number of orders producing it.
  std::map<Color, std::uint64_t> counts;

  Rational probability(Color x) const;
  /// P[X >= ell]; for max-color algorithms this is P[some vertex gets color >= ell].
  Rational tail(Color ell) const;
  Rational expectation() const;
  Color max_colors() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

struct EnumerationOptions {
  std::size_t max_vertices = 9;
  /// Worker threads; permutations are split into blocks by first vertex.
  std::size_t jobs = 1;
  ColorerFactory factory = make_colorer;
};

/// Runs `algorithm` under every arrival order. Throws ParameterError when n
/// exceeds the cap.
ExactDistribution enumerate_orders(const Graph& graph, std::string_view algorithm,
                                   const PredictionVector* predictions, const EnumerationOptions& options = {});

nlohmann::ordered_json exact_json(const ExactDistribution& distribution);

/// T_v: vertices whose tree path to v has strictly increasing arrival times,
/// with the edges of those paths oriented toward v.
struct OrientedReachTree {
  Vertex root = 0;
  std::vector<Vertex> members;  // sorted
  std::vector<Edge> in_edges;   // (earlier endpoint u, later endpoint v)
};

/// Requires a forest and arrival times forming a permutation.
OrientedReachTree reach_tree(const Graph& graph, std::span<const std::uint32_t> arrival, Vertex v);

struct WitnessViolation {
  Vertex vertex;
  Color color;
  std::size_t required;
  std::size_t found;
};

struct WitnessReport {
  std::size_t checked = 0;
  std::vector<WitnessViolation> violations;
  /// Full DP table, kept only when a violation was found.
  std::vector<std::uint32_t> table;
  bool ok() const noexcept { return violations.empty(); }
};

/// Every vertex with color ell must end a path of at least ell vertices whose
/// arrival times increase toward it. Computed from graph and arrival times only.
WitnessReport check_increasing_paths(const Transcript& transcript, const Graph& graph);

/// Every vertex with color ell must end an increasing-arrival path that
/// contains at least floor((ell-1)/4) wrongly predicted vertices.
WitnessReport check_error_paths(const Transcript& transcript, const Graph& graph, const PredictionVector& predictions);

/// All level sequences of rooted unlabeled trees on n vertices (root at level 1),
/// in the Beyer-Hedetniemi order.
std::vector<std::vector<std::uint32_t>> rooted_level_sequences(std::size_t n);
Graph tree_from_level_sequence(std::span<const std::uint32_t> levels);
/// Center-rooted AHU encoding; equal iff the trees are isomorphic.
std::string free_tree_canonical_form(const Graph& tree);
/// One representative per isomorphism class of trees on n vertices.
std::vector<Graph> nonisomorphic_trees(std::size_t n);

}  // namespace onlinecolor
