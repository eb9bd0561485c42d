#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "onlinecolor/graph.hpp"

namespace onlinecolor {

struct RevealedNeighbor {
  Vertex id;
  Color color;
};

/// An online coloring algorithm. It sees one vertex at a time together with
/// the already revealed neighbors and their colors, and must answer with a
/// color immediately. Nothing about n or the future is passed in.
class OnlineColorer {
 public:
  virtual ~OnlineColorer() = default;

  virtual std::string_view name() const = 0;
  virtual bool uses_advice() const = 0;
  /// Clears all per-run state.
  virtual void reset() = 0;
  virtual Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) = 0;
};

struct ArrivalOrder {
  enum class Provenance { given, uniform_random };

  std::vector<Vertex> order;
  Provenance provenance = Provenance::given;
  std::optional<std::uint64_t> seed;

  static ArrivalOrder given(std::vector<Vertex> order) { return {std::move(order), Provenance::given, {}}; }
  static ArrivalOrder identity(std::size_t n);
};

/// Throws ParameterError unless `order` is a permutation of [0, n).
void validate_order(std::span<const Vertex> order, std::size_t n);

/// Uniform random permutation (Fisher-Yates), deterministic in the seed.
ArrivalOrder sample_order(std::size_t n, std::uint64_t seed);

/// Deterministic traversal orders, used as hand-picked hard presentations.
enum class OrderPattern { identity, bfs, reverse_bfs, dfs_preorder, dfs_postorder };
ArrivalOrder structured_order(const Graph& graph, OrderPattern pattern);

enum class ErrorMode { none, random_k, explicit_set };

struct PredictionVector {
  /// Advice bit of the canonical 2-coloring: 1 iff the vertex is on side 1.
  std::vector<std::uint8_t> truth;
  std::vector<std::uint8_t> delivered;
  /// Sorted vertices where delivered != truth.
  std::vector<Vertex> error_set;
  std::size_t k = 0;
  /// Error count after choosing, per component, whichever of the two 2-colorings
  /// the advice matches better.
  std::size_t k_min = 0;
  std::optional<std::uint64_t> seed;

  std::size_t size() const noexcept { return truth.size(); }
};

PredictionVector make_predictions(const Bipartition& bipartition);
/// Flips exactly k distinct, uniformly chosen positions.
PredictionVector make_predictions_random(const Bipartition& bipartition, std::size_t k, std::uint64_t seed);
PredictionVector make_predictions_explicit(const Bipartition& bipartition, std::span<const Vertex> errors);
/// Wraps an arbitrary advice string, deriving the error set against the canonical coloring.
PredictionVector predictions_from_delivered(const Bipartition& bipartition, std::vector<std::uint8_t> delivered);

struct TranscriptStep {
  Vertex vertex;
  /// Empty when the transcript was recorded without neighbor lists.
  std::vector<Vertex> revealed_neighbors;
  std::optional<bool> advice;
  Color color;
};

struct Transcript {
  std::string algorithm;
  std::vector<TranscriptStep> steps;
  bool neighbors_recorded = true;
  /// Per-vertex color and arrival step (index into steps); sized to the largest id seen.
  std::vector<Color> colors;
  std::vector<std::uint32_t> arrival;
  /// X: the largest color assigned.
  Color colors_used = 0;

  std::uint64_t instance_hash = 0;
  std::optional<std::uint64_t> order_seed;
  std::optional<std::uint64_t> error_seed;
  std::optional<std::size_t> k;
  std::optional<std::size_t> k_min;

  std::size_t distinct_colors() const;
  std::vector<Vertex> order() const;
};

enum class RecordMode { full, colors_only };

/// The referee for one online run. Feeds vertices to the algorithm, checks
/// every answer against the revealed neighbors and owns the transcript.
/// Vertex ids are arbitrary but may be revealed at most once.
class RevealSession {
 public:
  explicit RevealSession(OnlineColorer& algorithm, RecordMode mode = RecordMode::full);

  /// Reveals `v` with its edges to already revealed vertices. Throws
  /// ProtocolViolation if the algorithm answers with 0 or a neighbor's color.
  Color reveal(Vertex v, std::span<const Vertex> earlier_neighbors, std::optional<bool> advice);

  bool revealed(Vertex v) const { return v < arrival_.size() && arrival_[v] != kUnrevealed; }
  Color color_of(Vertex v) const { return revealed(v) ? transcript_.colors[v] : 0; }
  std::size_t step_count() const noexcept { return transcript_.steps.size(); }
  const Transcript& transcript() const noexcept { return transcript_; }
  Transcript take();

 private:
  static constexpr std::uint32_t kUnrevealed = UINT32_MAX;

  OnlineColorer& algorithm_;
  RecordMode mode_;
  Transcript transcript_;
  std::vector<std::uint32_t> arrival_;
  std::vector<RevealedNeighbor> scratch_;
};

/// Drives `algorithm` over `graph` in the given order. Advice is passed for
/// every vertex when `predictions` is set and withheld otherwise. The
/// instance hash is only computed in RecordMode::full.
Transcript run(const Graph& graph, const ArrivalOrder& order, const PredictionVector* predictions,
               OnlineColorer& algorithm, RecordMode mode = RecordMode::full);

/// Stable-field-order JSON for diffing.
nlohmann::ordered_json transcript_json(const Transcript& transcript);

std::string hex64(std::uint64_t value);

}  // namespace onlinecolor
