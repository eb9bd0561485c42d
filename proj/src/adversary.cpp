#include "onlinecolor/adversary.hpp"

#include <algorithm>
#include <set>

#include "onlinecolor/errors.hpp"

namespace onlinecolor {

std::size_t forcing_tree_size(std::size_t ell) {
  if (ell < 3) throw ParameterError("forcing needs ell >= 3");
  if (ell > 40) throw ParameterError("ell too large");
  return std::size_t{3} << (ell - 3);
}

std::string_view verdict_name(AdversaryOutcome::Verdict verdict) {
  return verdict == AdversaryOutcome::Verdict::forced ? "forced" : "inconsistency-witness";
}

AdversaryGame::AdversaryGame(OnlineColorer& algorithm) : session_(algorithm) { algorithm.reset(); }

Vertex AdversaryGame::probe(bool advice) {
  const auto v = static_cast<Vertex>(advice_.size());
  advice_.push_back(advice ? 1 : 0);
  const Color color = session_.reveal(v, {}, advice);

  auto& group = advice ? one_group_ : zero_group_;
  auto& group_color = advice ? probes_.one_color : probes_.zero_color;
  const auto& other_color = advice ? probes_.zero_color : probes_.one_color;
  group.push_back(v);
  if (group_color && *group_color != color) probes_.consistent = false;
  if (!group_color) group_color = color;
  if (other_color && *other_color == color) probes_.consistent = false;
  return v;
}

Vertex AdversaryGame::connect(std::vector<Vertex> neighbors, bool advice) {
  const auto v = static_cast<Vertex>(advice_.size());
  advice_.push_back(advice ? 1 : 0);
  for (Vertex u : neighbors) edges_.push_back({u, v});
  session_.reveal(v, neighbors, advice);
  return v;
}

void AdversaryGame::punish_inconsistency() {
  // In the completed tree the advice-0 probes and w1 share one side; w0 and
  // the advice-1 probes the other. Advice for w0/w1 follows that coloring.
  const Vertex w0 = connect(zero_group_, true);
  std::vector<Vertex> w1_neighbors = one_group_;
  w1_neighbors.push_back(w0);
  connect(std::move(w1_neighbors), false);
}

AdversaryOutcome AdversaryGame::outcome(AdversaryOutcome::Verdict verdict, std::size_t target,
                                        std::size_t budget) const {
  AdversaryOutcome result;
  result.verdict = verdict;
  result.target = target;
  result.graph = Graph(advice_.size(), edges_);
  result.advice = advice_;
  result.transcript = session_.transcript();
  result.transcript.colors.resize(advice_.size());
  result.transcript.arrival.resize(advice_.size());
  for (std::size_t i = 0; i < result.transcript.steps.size(); ++i) {
    result.transcript.arrival[result.transcript.steps[i].vertex] = static_cast<std::uint32_t>(i);
  }
  result.transcript.instance_hash = result.graph.content_hash();
  result.vertices_used = advice_.size();
  result.vertex_budget = budget;
  const auto sides = bipartition(result.graph);
  if (const auto* canonical = std::get_if<Bipartition>(&sides)) {
    const PredictionVector predictions = predictions_from_delivered(*canonical, advice_);
    result.k_min = predictions.k_min;
    result.transcript.k = predictions.k;
    result.transcript.k_min = predictions.k_min;
  }
  return result;
}

ProbeResult probe_isolated(OnlineColorer& algorithm, std::size_t zeros, std::size_t ones) {
  AdversaryGame game(algorithm);
  std::size_t z = 0;
  std::size_t o = 0;
  while (z < zeros || o < ones) {
    if (z < zeros) {
      game.probe(false);
      ++z;
      if (!game.probe_state().consistent) break;
    }
    if (o < ones) {
      game.probe(true);
      ++o;
      if (!game.probe_state().consistent) break;
    }
  }

  ProbeResult result;
  const auto& state = game.probe_state();
  if (state.consistent) {
    result.colors = std::make_pair(state.zero_color.value_or(0), state.one_color.value_or(0));
  } else {
    game.punish_inconsistency();
    result.witness = game.outcome(AdversaryOutcome::Verdict::inconsistency_witness, 3, 0);
  }
  return result;
}

namespace {

struct Node {
  std::size_t level;
  Vertex zero_probe = 0;
  Vertex one_probe = 0;
  /// Sub-trees for levels 3..level-1, in that order.
  std::vector<Node> children;
  /// Every vertex of the sub-tree rooted here, filled in during connection.
  std::vector<Vertex> members;
};

Node plan(std::size_t level) {
  Node node;
  node.level = level;
  for (std::size_t i = 3; i < level; ++i) node.children.push_back(plan(i));
  return node;
}

/// Pre-order probe pass. Returns false as soon as the probes turn inconsistent.
bool reveal_probes(AdversaryGame& game, Node& node) {
  node.zero_probe = game.probe(false);
  if (!game.probe_state().consistent) return false;
  node.one_probe = game.probe(true);
  if (!game.probe_state().consistent) return false;
  for (Node& child : node.children) {
    if (!reveal_probes(game, child)) return false;
  }
  return true;
}

/// Post-order connector pass.
void connect_subtree(AdversaryGame& game, Node& node) {
  node.members = {node.zero_probe, node.one_probe};
  std::set<Color> excluded{game.color_of(node.zero_probe), game.color_of(node.one_probe)};
  std::vector<Vertex> neighbors{node.zero_probe, node.one_probe};

  for (Node& child : node.children) {
    connect_subtree(game, child);
    // Smallest color of the child outside the excluded set; its earliest vertex represents it.
    std::optional<std::pair<Color, Vertex>> best;
    for (Vertex v : child.members) {
      const Color c = game.color_of(v);
      if (excluded.count(c) != 0) continue;
      if (!best || c < best->first || (c == best->first && v < best->second)) best = std::make_pair(c, v);
    }
    if (!best) {
      throw Error("adversary: sub-tree of level " + std::to_string(child.level) +
                  " has no color outside the excluded set");
    }
    excluded.insert(best->first);
    neighbors.push_back(best->second);
    node.members.insert(node.members.end(), child.members.begin(), child.members.end());
  }
  // The connector sits opposite the advice-1 probe in the tree, so its advice is 0.
  node.members.push_back(game.connect(std::move(neighbors), false));
}

}  // namespace

AdversaryOutcome force(std::size_t ell, OnlineColorer& algorithm) {
  const std::size_t budget = forcing_tree_size(ell);
  AdversaryGame game(algorithm);
  Node root = plan(ell);

  if (!reveal_probes(game, root)) {
    game.punish_inconsistency();
    return game.outcome(AdversaryOutcome::Verdict::inconsistency_witness, ell, budget);
  }
  connect_subtree(game, root);

  if (game.vertex_count() != budget) {
    throw Error("adversary: used " + std::to_string(game.vertex_count()) + " vertices, budget is " +
                std::to_string(budget));
  }
  AdversaryOutcome result = game.outcome(AdversaryOutcome::Verdict::forced, ell, budget);
  if (result.colors_used() < ell) {
    throw Error("adversary: construction finished with only " + std::to_string(result.colors_used()) + " colors");
  }
  return result;
}

nlohmann::ordered_json adversary_json(const AdversaryOutcome& outcome) {
  nlohmann::ordered_json out;
  out["verdict"] = verdict_name(outcome.verdict);
  out["ell"] = outcome.target;
  out["X"] = outcome.colors_used();
  out["vertices"] = outcome.vertices_used;
  out["vertex_budget"] = outcome.vertex_budget;
  out["is_tree"] = outcome.graph.is_tree();
  out["k_min"] = outcome.k_min;
  out["advice"] = outcome.advice;
  out["transcript"] = transcript_json(outcome.transcript);
  return out;
}

}  // namespace onlinecolor
