#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "onlinecolor/reveal.hpp"

namespace onlinecolor {

/// Growable bitset of colors.
class ColorSet {
 public:
  void insert(Color c);
  bool contains(Color c) const;
  void merge(const ColorSet& other);
  /// Smallest positive color not in the set.
  Color smallest_absent() const;
  std::size_t size() const;

 private:
  std::vector<std::uint64_t> words_;
};

/// Union-find over revealed vertices that tracks, for every vertex, its
/// parity relative to the component root, plus the colors present on each
/// of the component's two shores. Union by size, path compression.
class ShoreState {
 public:
  void clear();
  /// Registers v as a fresh singleton component.
  void add_vertex(Vertex v);
  /// Merges the components of v and u with v and u on opposite shores.
  /// Throws NonBipartiteError if they are already in one component on the same shore.
  void join_opposite(Vertex v, Vertex u);
  /// Colors on the shore of v's component that does not contain v.
  const ColorSet& opposite_colors(Vertex v);
  const ColorSet& own_colors(Vertex v);
  void add_color(Vertex v, Color c);

  struct Root {
    Vertex root;
    std::uint8_t parity;
  };
  Root find(Vertex v);

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> parity_;  // parity to parent
  std::vector<std::uint32_t> size_;
  // shores_[root][s]: colors on the shore with parity s relative to root.
  std::vector<std::array<ColorSet, 2>> shores_;
  std::vector<Vertex> path_;
};

/// Smallest color not used by any neighbor.
class FirstFit final : public OnlineColorer {
 public:
  std::string_view name() const override { return "first-fit"; }
  bool uses_advice() const override { return false; }
  void reset() override {}
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override;

 private:
  std::vector<std::uint8_t> used_;
};

/// Smallest color absent from the opposite shore of the vertex's component.
class CBip : public OnlineColorer {
 public:
  std::string_view name() const override { return "cbip"; }
  bool uses_advice() const override { return false; }
  void reset() override { shores_.clear(); }
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override;

 protected:
  ShoreState shores_;
};

/// Follows the advice bit for isolated vertices (1 -> color 1, 0 -> color 2),
/// otherwise FirstFit.
class AdviceFirstFit final : public OnlineColorer {
 public:
  std::string_view name() const override { return "advice-first-fit"; }
  bool uses_advice() const override { return true; }
  void reset() override {}
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override;

 private:
  FirstFit first_fit_;
};

/// Follows the advice bit for isolated vertices, otherwise the CBip rule.
class AdviceCBip final : public CBip {
 public:
  std::string_view name() const override { return "advice-cbip"; }
  bool uses_advice() const override { return true; }
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override;
};

/// Smallest free color whose parity matches the advice (1 -> odd, 0 -> even).
class ParityFirstFit final : public OnlineColorer {
 public:
  std::string_view name() const override { return "parity-first-fit"; }
  bool uses_advice() const override { return true; }
  void reset() override {}
  Color color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) override;

 private:
  std::vector<std::uint8_t> used_;
};

/// Smallest color >= 1 absent from the neighbors' colors.
Color first_free_color(std::span<const RevealedNeighbor> neighbors, std::vector<std::uint8_t>& scratch);

using ColorerFactory = std::function<std::unique_ptr<OnlineColorer>(std::string_view)>;

/// Registry names: first-fit, cbip, advice-first-fit, advice-cbip, parity-first-fit.
std::span<const std::string_view> algorithm_names();
bool is_algorithm_name(std::string_view name);
bool algorithm_uses_advice(std::string_view name);
/// Throws ParameterError on unknown names.
std::unique_ptr<OnlineColorer> make_colorer(std::string_view name);

}  // namespace onlinecolor
