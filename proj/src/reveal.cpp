#include "onlinecolor/reveal.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <set>

#include "onlinecolor/errors.hpp"
#include "onlinecolor/rng.hpp"

namespace onlinecolor {

ArrivalOrder ArrivalOrder::identity(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return given(std::move(order));
}

void validate_order(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) {
    throw ParameterError("order has " + std::to_string(order.size()) + " entries, graph has " + std::to_string(n) +
                         " vertices");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n) throw ParameterError("order mentions vertex " + std::to_string(v) + " outside [0, n)");
    if (seen[v]++) throw ParameterError("order repeats vertex " + std::to_string(v));
  }
}

ArrivalOrder sample_order(std::size_t n, std::uint64_t seed) {
  ArrivalOrder result = ArrivalOrder::identity(n);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(result.order[i - 1], result.order[j]);
  }
  result.provenance = ArrivalOrder::Provenance::uniform_random;
  result.seed = seed;
  return result;
}

ArrivalOrder structured_order(const Graph& graph, OrderPattern pattern) {
  const std::size_t n = graph.vertex_count();
  if (pattern == OrderPattern::identity) return ArrivalOrder::identity(n);

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    if (pattern == OrderPattern::bfs || pattern == OrderPattern::reverse_bfs) {
      std::queue<Vertex> frontier;
      frontier.push(root);
      while (!frontier.empty()) {
        const Vertex x = frontier.front();
        frontier.pop();
        order.push_back(x);
        for (Vertex y : graph.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            frontier.push(y);
          }
        }
      }
    } else {
      // Iterative DFS keeping (vertex, next neighbor index).
      std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
      if (pattern == OrderPattern::dfs_preorder) order.push_back(root);
      while (!stack.empty()) {
        auto& [x, next] = stack.back();
        const auto neighbors = graph.neighbors(x);
        if (next < neighbors.size()) {
          const Vertex y = neighbors[next++];
          if (!seen[y]) {
            seen[y] = 1;
            if (pattern == OrderPattern::dfs_preorder) order.push_back(y);
            stack.push_back({y, 0});
          }
        } else {
          if (pattern == OrderPattern::dfs_postorder) order.push_back(x);
          stack.pop_back();
        }
      }
    }
  }
  if (pattern == OrderPattern::reverse_bfs) std::reverse(order.begin(), order.end());
  return ArrivalOrder::given(std::move(order));
}

namespace {

std::size_t minimal_error_count(const Bipartition& bipartition, std::span<const Vertex> errors) {
  std::vector<std::size_t> flips(bipartition.component_count, 0);
  std::vector<std::size_t> sizes(bipartition.component_count, 0);
  for (std::uint32_t c : bipartition.component) ++sizes[c];
  for (Vertex v : errors) ++flips[bipartition.component[v]];
  std::size_t total = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) total += std::min(flips[c], sizes[c] - flips[c]);
  return total;
}

PredictionVector with_errors(const Bipartition& bipartition, std::vector<Vertex> errors) {
  PredictionVector result;
  result.truth = bipartition.side;
  result.delivered = bipartition.side;
  std::sort(errors.begin(), errors.end());
  errors.erase(std::unique(errors.begin(), errors.end()), errors.end());
  for (Vertex v : errors) result.delivered[v] ^= 1;
  result.k = errors.size();
  result.k_min = minimal_error_count(bipartition, errors);
  result.error_set = std::move(errors);
  return result;
}

}  // namespace

PredictionVector make_predictions(const Bipartition& bipartition) { return with_errors(bipartition, {}); }

PredictionVector make_predictions_random(const Bipartition& bipartition, std::size_t k, std::uint64_t seed) {
  const std::size_t n = bipartition.side.size();
  if (k > n) throw ParameterError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  PredictionVector result = with_errors(bipartition, std::move(pool));
  result.seed = seed;
  return result;
}

PredictionVector make_predictions_explicit(const Bipartition& bipartition, std::span<const Vertex> errors) {
  const std::size_t n = bipartition.side.size();
  for (Vertex v : errors) {
    if (v >= n) throw ParameterError("error vertex " + std::to_string(v) + " outside [0, n)");
  }
  return with_errors(bipartition, {errors.begin(), errors.end()});
}

PredictionVector predictions_from_delivered(const Bipartition& bipartition, std::vector<std::uint8_t> delivered) {
  if (delivered.size() != bipartition.side.size()) throw ParameterError("advice length does not match graph");
  std::vector<Vertex> errors;
  for (Vertex v = 0; v < delivered.size(); ++v) {
    if ((delivered[v] != 0) != (bipartition.side[v] != 0)) errors.push_back(v);
  }
  return with_errors(bipartition, std::move(errors));
}

std::size_t Transcript::distinct_colors() const {
  std::set<Color> used;
  for (const auto& step : steps) used.insert(step.color);
  return used.size();
}

std::vector<Vertex> Transcript::order() const {
  std::vector<Vertex> result;
  result.reserve(steps.size());
  for (const auto& step : steps) result.push_back(step.vertex);
  return result;
}

RevealSession::RevealSession(OnlineColorer& algorithm, RecordMode mode) : algorithm_(algorithm), mode_(mode) {
  transcript_.algorithm = std::string(algorithm.name());
  transcript_.neighbors_recorded = mode == RecordMode::full;
}

Color RevealSession::reveal(Vertex v, std::span<const Vertex> earlier_neighbors, std::optional<bool> advice) {
  const std::size_t step = transcript_.steps.size();
  if (revealed(v)) throw ProtocolViolation(step, "vertex " + std::to_string(v) + " revealed twice");

  scratch_.clear();
  for (Vertex u : earlier_neighbors) {
    if (!revealed(u)) {
      throw ProtocolViolation(step, "neighbor " + std::to_string(u) + " of " + std::to_string(v) +
                                        " has not been revealed");
    }
    scratch_.push_back({u, transcript_.colors[u]});
  }

  const Color color = algorithm_.color_next(v, scratch_, advice);
  if (color == 0) throw ProtocolViolation(step, std::string(algorithm_.name()) + " returned color 0");
  for (const auto& neighbor : scratch_) {
    if (neighbor.color == color) {
      throw ProtocolViolation(step, std::string(algorithm_.name()) + " gave vertex " + std::to_string(v) +
                                        " color " + std::to_string(color) + " already used by neighbor " +
                                        std::to_string(neighbor.id));
    }
  }

  if (v >= arrival_.size()) {
    const std::size_t size = std::max<std::size_t>(v + 1, arrival_.size() * 2);
    arrival_.resize(size, kUnrevealed);
    transcript_.colors.resize(size, 0);
  }
  arrival_[v] = static_cast<std::uint32_t>(step);
  transcript_.colors[v] = color;
  transcript_.colors_used = std::max(transcript_.colors_used, color);
  TranscriptStep record{v, {}, advice, color};
  if (mode_ == RecordMode::full) record.revealed_neighbors.assign(earlier_neighbors.begin(), earlier_neighbors.end());
  transcript_.steps.push_back(std::move(record));
  return color;
}

Transcript RevealSession::take() {
  Transcript result = std::move(transcript_);
  // Trim the growth slack so per-vertex arrays match the largest revealed id.
  std::size_t size = 0;
  for (const auto& step : result.steps) size = std::max<std::size_t>(size, step.vertex + 1);
  result.colors.resize(size);
  result.arrival.assign(arrival_.begin(), arrival_.begin() + static_cast<std::ptrdiff_t>(std::min(size, arrival_.size())));
  return result;
}

Transcript run(const Graph& graph, const ArrivalOrder& order, const PredictionVector* predictions,
               OnlineColorer& algorithm, RecordMode mode) {
  const std::size_t n = graph.vertex_count();
  validate_order(order.order, n);
  if (predictions != nullptr && predictions->size() != n) {
    throw ParameterError("prediction vector covers " + std::to_string(predictions->size()) + " vertices, graph has " +
                         std::to_string(n));
  }

  algorithm.reset();
  RevealSession session(algorithm, mode);
  std::vector<Vertex> earlier;
  for (Vertex v : order.order) {
    earlier.clear();
    for (Vertex u : graph.neighbors(v)) {
      if (session.revealed(u)) earlier.push_back(u);
    }
    std::optional<bool> advice;
    if (predictions != nullptr) advice = predictions->delivered[v] != 0;
    session.reveal(v, earlier, advice);
  }

  Transcript transcript = session.take();
  transcript.colors.resize(n, 0);
  transcript.arrival.resize(n, 0);
  if (mode == RecordMode::full) transcript.instance_hash = graph.content_hash();
  transcript.order_seed = order.seed;
  if (predictions != nullptr) {
    transcript.error_seed = predictions->seed;
    transcript.k = predictions->k;
    transcript.k_min = predictions->k_min;
  }
  return transcript;
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

nlohmann::ordered_json transcript_json(const Transcript& transcript) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["instance_hash"] = hex64(transcript.instance_hash);
  ordered_json seeds = ordered_json::object();
  seeds["order"] = transcript.order_seed ? ordered_json(*transcript.order_seed) : ordered_json(nullptr);
  seeds["errors"] = transcript.error_seed ? ordered_json(*transcript.error_seed) : ordered_json(nullptr);
  out["seeds"] = seeds;
  out["algorithm"] = transcript.algorithm;
  ordered_json steps = ordered_json::array();
  for (const auto& step : transcript.steps) {
    ordered_json row;
    row["vertex"] = step.vertex;
    row["revealed_neighbors"] = step.revealed_neighbors;
    row["advice"] = step.advice ? ordered_json(*step.advice ? 1 : 0) : ordered_json(nullptr);
    row["color"] = step.color;
    steps.push_back(std::move(row));
  }
  out["steps"] = std::move(steps);
  out["X"] = transcript.colors_used;
  out["k"] = transcript.k ? ordered_json(*transcript.k) : ordered_json(nullptr);
  out["k_min"] = transcript.k_min ? ordered_json(*transcript.k_min) : ordered_json(nullptr);
  return out;
}

}  // namespace onlinecolor
