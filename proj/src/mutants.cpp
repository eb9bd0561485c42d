#include "onlinecolor/mutants.hpp"

#include <algorithm>
#include <string>

#include "onlinecolor/errors.hpp"

namespace onlinecolor {

namespace {

class ClimbingFirstFit final : public OnlineColorer {
 public:
  std::string_view name() const override { return "first-fit"; }
  bool uses_advice() const override { return false; }
  void reset() override {}
  Color color_next(Vertex, std::span<const RevealedNeighbor> neighbors, std::optional<bool>) override {
    Color top = 0;
    for (const auto& neighbor : neighbors) top = std::max(top, neighbor.color);
    return top + 1;
  }
};

class BothShoresCBip final : public CBip {
 public:
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool>) override {
    shores_.add_vertex(v);
    for (const auto& neighbor : neighbors) shores_.join_opposite(v, neighbor.id);
    ColorSet blocked = shores_.opposite_colors(v);
    blocked.merge(shores_.own_colors(v));
    const Color color = blocked.smallest_absent();
    shores_.add_color(v, color);
    return color;
  }
};

/// Wraps an advice algorithm and replaces the advice of isolated vertices by 1.
class AdviceBlind final : public OnlineColorer {
 public:
  explicit AdviceBlind(std::unique_ptr<OnlineColorer> inner) : inner_(std::move(inner)) {}
  std::string_view name() const override { return inner_->name(); }
  bool uses_advice() const override { return true; }
  void reset() override { inner_->reset(); }
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override {
    return inner_->color_next(v, neighbors, neighbors.empty() ? std::optional<bool>(true) : advice);
  }

 private:
  std::unique_ptr<OnlineColorer> inner_;
};

class AdviceDeafParity final : public OnlineColorer {
 public:
  std::string_view name() const override { return "parity-first-fit"; }
  bool uses_advice() const override { return true; }
  void reset() override { inner_.reset(); }
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool>) override {
    return inner_.color_next(v, neighbors, std::nullopt);
  }

 private:
  FirstFit inner_;
};

}  // namespace

std::unique_ptr<OnlineColorer> make_mutant(std::string_view name) {
  if (name == "first-fit") return std::make_unique<ClimbingFirstFit>();
  if (name == "cbip") return std::make_unique<BothShoresCBip>();
  if (name == "advice-first-fit" || name == "advice-cbip") return std::make_unique<AdviceBlind>(make_colorer(name));
  if (name == "parity-first-fit") return std::make_unique<AdviceDeafParity>();
  throw ParameterError("no mutant for '" + std::string(name) + "'");
}

ColorerFactory mutated_factory(std::string_view mutated) {
  if (!is_algorithm_name(mutated)) throw ParameterError("unknown algorithm '" + std::string(mutated) + "'");
  return [target = std::string(mutated)](std::string_view name) {
    return name == target ? make_mutant(name) : make_colorer(name);
  };
}

}  // namespace onlinecolor
