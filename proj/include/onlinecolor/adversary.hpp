#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "onlinecolor/graph.hpp"
#include "onlinecolor/reveal.hpp"

namespace onlinecolor {

/// Number of vertices the forcing construction uses to force `ell` colors: 3 * 2^(ell-3).
std::size_t forcing_tree_size(std::size_t ell);

struct AdversaryOutcome {
  enum class Verdict { forced, inconsistency_witness };

  Verdict verdict = Verdict::forced;
  /// Requested color count.
  std::size_t target = 0;
  /// Vertex ids are reveal indices.
  Graph graph;
  std::vector<std::uint8_t> advice;
  Transcript transcript;
  std::size_t vertices_used = 0;
  /// 3 * 2^(target-3) for the forcing branch.
  std::size_t vertex_budget = 0;
  /// Advice errors of the built instance against its best per-component 2-coloring.
  std::size_t k_min = 0;

  Color colors_used() const noexcept { return transcript.colors_used; }
};

std::string_view verdict_name(AdversaryOutcome::Verdict verdict);

/// Plays the adaptive lower-bound game for trees with advice.
///
/// All isolated probe vertices (one with advice 0 and one with advice 1 per
/// recursion node) are revealed first. While the algorithm colors every
/// advice-0 probe with one color and every advice-1 probe with another, the
/// game then reveals the connector vertices bottom-up: a node of level i
/// joins its two probes and one representative vertex from each sub-tree
/// T_3..T_{i-1}, chosen with the smallest color that is not yet excluded.
/// The root connector then needs a color outside ell - 1 distinct colors.
///
/// If the probes are ever colored inconsistently, the game stops and
/// attaches w0 to all advice-0 probes and w1 to all advice-1 probes and to
/// w0. That instance is a tree with error-free advice on which the
/// algorithm used at least three colors.
class AdversaryGame {
 public:
  struct ProbeState {
    bool consistent = true;
    std::optional<Color> zero_color;
    std::optional<Color> one_color;
  };

  explicit AdversaryGame(OnlineColorer& algorithm);

  /// Reveals an isolated vertex with the given advice and updates the probe groups.
  Vertex probe(bool advice);
  const ProbeState& probe_state() const noexcept { return probes_; }

  /// Reveals a vertex adjacent to `neighbors` (all already revealed).
  Vertex connect(std::vector<Vertex> neighbors, bool advice);

  /// Reveals the w0/w1 gadget over the current probe groups.
  void punish_inconsistency();

  /// Snapshot of everything revealed so far.
  AdversaryOutcome outcome(AdversaryOutcome::Verdict verdict, std::size_t target, std::size_t budget) const;

  Color color_of(Vertex v) const { return session_.color_of(v); }
  std::size_t vertex_count() const noexcept { return advice_.size(); }

 private:
  RevealSession session_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> advice_;
  std::vector<Vertex> zero_group_;
  std::vector<Vertex> one_group_;
  ProbeState probes_;
};

struct ProbeResult {
  /// Set when both groups were colored consistently.
  std::optional<std::pair<Color, Color>> colors;  // (advice-0 color, advice-1 color)
  /// Set when the gadget had to be played.
  std::optional<AdversaryOutcome> witness;
};

/// Reveals `zeros` advice-0 and `ones` advice-1 isolated vertices (alternating,
/// zeros first) to a fresh run of `algorithm`, escalating to the gadget on
/// the first inconsistency.
ProbeResult probe_isolated(OnlineColorer& algorithm, std::size_t zeros, std::size_t ones);

/// Forces `ell` >= 3 colors on a tree of 3 * 2^(ell-3) vertices, or returns
/// an inconsistency witness.
AdversaryOutcome force(std::size_t ell, OnlineColorer& algorithm);

nlohmann::ordered_json adversary_json(const AdversaryOutcome& outcome);

}  // namespace onlinecolor
