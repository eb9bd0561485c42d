#include "onlinecolor/algorithms.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "onlinecolor/errors.hpp"

namespace onlinecolor {

void ColorSet::insert(Color c) {
  const std::size_t word = c / 64;
  if (word >= words_.size()) words_.resize(word + 1, 0);
  words_[word] |= std::uint64_t{1} << (c % 64);
}

bool ColorSet::contains(Color c) const {
  const std::size_t word = c / 64;
  return word < words_.size() && ((words_[word] >> (c % 64)) & 1U) != 0;
}

void ColorSet::merge(const ColorSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
}

Color ColorSet::smallest_absent() const {
  // Bit 0 stands for the non-color 0 and is treated as present.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t free = ~words_[i];
    if (i == 0) free &= ~std::uint64_t{1};
    if (free != 0) return static_cast<Color>(i * 64 + static_cast<std::size_t>(std::countr_zero(free)));
  }
  return words_.empty() ? 1 : static_cast<Color>(words_.size() * 64);
}

std::size_t ColorSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void ShoreState::clear() {
  parent_.clear();
  parity_.clear();
  size_.clear();
  shores_.clear();
}

void ShoreState::add_vertex(Vertex v) {
  if (v >= parent_.size()) {
    const std::size_t size = std::max<std::size_t>(v + 1, parent_.size() * 2);
    parent_.resize(size, UINT32_MAX);
    parity_.resize(size, 0);
    size_.resize(size, 0);
    shores_.resize(size);
  }
  parent_[v] = v;
  parity_[v] = 0;
  size_[v] = 1;
  shores_[v] = {};
}

ShoreState::Root ShoreState::find(Vertex v) {
  path_.clear();
  Vertex x = v;
  while (parent_[x] != x) {
    path_.push_back(x);
    x = parent_[x];
  }
  const Vertex root = x;
  // Walk back from the vertex nearest the root, accumulating parity to root.
  std::uint8_t acc = 0;
  for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
    acc ^= parity_[*it];
    parity_[*it] = acc;
    parent_[*it] = root;
  }
  return {root, path_.empty() ? std::uint8_t{0} : parity_[v]};
}

void ShoreState::join_opposite(Vertex v, Vertex u) {
  auto [rv, pv] = find(v);
  auto [ru, pu] = find(u);
  if (rv == ru) {
    if (pv == pu) {
      throw NonBipartiteError("edge {" + std::to_string(v) + "," + std::to_string(u) + "} closes an odd cycle");
    }
    return;
  }
  if (size_[rv] < size_[ru]) {
    std::swap(rv, ru);
    std::swap(pv, pu);
  }
  // Attach ru below rv with offset chosen so that parity(v) != parity(u).
  const std::uint8_t offset = static_cast<std::uint8_t>(1 ^ pv ^ pu);
  parent_[ru] = rv;
  parity_[ru] = offset;
  size_[rv] += size_[ru];
  shores_[rv][0].merge(shores_[ru][offset]);
  shores_[rv][1].merge(shores_[ru][1 ^ offset]);
  shores_[ru] = {};
}

const ColorSet& ShoreState::opposite_colors(Vertex v) {
  const auto [root, parity] = find(v);
  return shores_[root][1 ^ parity];
}

const ColorSet& ShoreState::own_colors(Vertex v) {
  const auto [root, parity] = find(v);
  return shores_[root][parity];
}

void ShoreState::add_color(Vertex v, Color c) {
  const auto [root, parity] = find(v);
  shores_[root][parity].insert(c);
}

Color first_free_color(std::span<const RevealedNeighbor> neighbors, std::vector<std::uint8_t>& scratch) {
  // Only colors 1..deg+1 can matter.
  scratch.assign(neighbors.size() + 2, 0);
  for (const auto& neighbor : neighbors) {
    if (neighbor.color < scratch.size()) scratch[neighbor.color] = 1;
  }
  Color c = 1;
  while (scratch[c]) ++c;
  return c;
}

namespace {

bool require_advice(std::string_view algorithm, std::optional<bool> advice) {
  if (!advice) throw ConfigurationError(std::string(algorithm) + " needs an advice bit for every vertex");
  return *advice;
}

Color advised_color(bool advice) { return advice ? 1 : 2; }

}  // namespace

Color FirstFit::color_next(Vertex, std::span<const RevealedNeighbor> neighbors, std::optional<bool>) {
  return first_free_color(neighbors, used_);
}

Color CBip::color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool>) {
  shores_.add_vertex(v);
  for (const auto& neighbor : neighbors) shores_.join_opposite(v, neighbor.id);
  const Color color = shores_.opposite_colors(v).smallest_absent();
  shores_.add_color(v, color);
  return color;
}

Color AdviceFirstFit::color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) {
  const bool bit = require_advice(name(), advice);
  if (neighbors.empty()) return advised_color(bit);
  return first_fit_.color_next(v, neighbors, advice);
}

Color AdviceCBip::color_next(Vertex v, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) {
  const bool bit = require_advice(name(), advice);
  if (!neighbors.empty()) return CBip::color_next(v, neighbors, advice);
  shores_.add_vertex(v);
  const Color color = advised_color(bit);
  shores_.add_color(v, color);
  return color;
}

Color ParityFirstFit::color_next(Vertex, std::span<const RevealedNeighbor> neighbors, std::optional<bool> advice) {
  const bool bit = require_advice(name(), advice);
  // Among same-parity colors, at most deg are blocked, so 2*deg + 2 suffices.
  used_.assign(2 * neighbors.size() + 3, 0);
  for (const auto& neighbor : neighbors) {
    if (neighbor.color < used_.size()) used_[neighbor.color] = 1;
  }
  Color c = bit ? 1 : 2;
  while (used_[c]) c += 2;
  return c;
}

namespace {

constexpr std::array<std::string_view, 5> kNames{"first-fit", "cbip", "advice-first-fit", "advice-cbip",
                                                 "parity-first-fit"};

}  // namespace

std::span<const std::string_view> algorithm_names() { return kNames; }

bool is_algorithm_name(std::string_view name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

bool algorithm_uses_advice(std::string_view name) {
  return name == "advice-first-fit" || name == "advice-cbip" || name == "parity-first-fit";
}

std::unique_ptr<OnlineColorer> make_colorer(std::string_view name) {
  if (name == "first-fit") return std::make_unique<FirstFit>();
  if (name == "cbip") return std::make_unique<CBip>();
  if (name == "advice-first-fit") return std::make_unique<AdviceFirstFit>();
  if (name == "advice-cbip") return std::make_unique<AdviceCBip>();
  if (name == "parity-first-fit") return std::make_unique<ParityFirstFit>();
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace onlinecolor
