#include "onlinecolor/instances.hpp"

#include <array>
#include <utility>

#include "onlinecolor/errors.hpp"
#include "onlinecolor/rng.hpp"

namespace onlinecolor {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::complete_binary_tree, "complete-binary-tree"},
    {Family::spider, "spider"},
    {Family::random_labeled_tree, "random-labeled-tree"},
    {Family::random_bipartite, "random-bipartite"},
    {Family::from_file, "from-file"},
}};

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(n, std::move(edges));
}

Graph complete_binary_tree(std::size_t n) {
  // n + 1 must be a power of two.
  if (((n + 1) & n) != 0) {
    throw ParameterError("complete-binary-tree needs n = 2^h - 1, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>((i - 1) / 2), static_cast<Vertex>(i)});
  return Graph(n, std::move(edges));
}

Graph spider_graph(std::size_t n, std::size_t legs) {
  if (legs == 0) throw ParameterError("spider needs at least one leg");
  if ((n - 1) % legs != 0) {
    throw ParameterError("spider needs legs to divide n - 1 (n=" + std::to_string(n) + ", legs=" +
                         std::to_string(legs) + ")");
  }
  const std::size_t length = (n - 1) / legs;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    Vertex previous = 0;
    for (std::size_t j = 0; j < length; ++j) {
      edges.push_back({previous, next});
      previous = next++;
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_bipartite(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
  const std::size_t left = (n + 1) / 2;
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < left; ++u) {
    for (std::size_t v = left; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, text] : kFamilyNames) {
    if (text == name) return f;
  }
  throw ParameterError("unknown instance family '" + std::string(name) + "'");
}

bool is_tree_family(Family family) {
  return family != Family::random_bipartite && family != Family::from_file;
}

bool is_random_family(Family family) {
  return family == Family::random_labeled_tree || family == Family::random_bipartite;
}

Graph generate(const InstanceSpec& spec) {
  if (spec.family != Family::from_file && spec.n < 1) throw ParameterError("n must be at least 1");
  switch (spec.family) {
    case Family::path:
      return path_graph(spec.n);
    case Family::star:
      return star_graph(spec.n);
    case Family::complete_binary_tree:
      return complete_binary_tree(spec.n);
    case Family::spider:
      return spider_graph(spec.n, spec.legs);
    case Family::random_labeled_tree: {
      const auto sequence = random_prufer_sequence(spec.n, spec.seed);
      return prufer_decode(sequence, spec.n);
    }
    case Family::random_bipartite:
      return random_bipartite(spec.n, spec.edge_probability, spec.seed);
    case Family::from_file:
      return read_edge_list_file(spec.path);
  }
  throw ParameterError("unhandled family");
}

Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
  if (n < 1) throw ParameterError("prufer_decode: n must be at least 1");
  if (n == 1) {
    if (!sequence.empty()) throw ParameterError("prufer_decode: sequence must be empty for n = 1");
    return Graph(1, {});
  }
  if (sequence.size() != n - 2) {
    throw ParameterError("prufer_decode: sequence length " + std::to_string(sequence.size()) + " != n - 2 = " +
                         std::to_string(n - 2));
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex label : sequence) {
    if (label >= n) throw ParameterError("prufer_decode: label " + std::to_string(label) + " out of range");
    ++degree[label];
  }

  // Linear-time decoding: `pointer` scans for the next smallest leaf, while a
  // label that just became a leaf below the pointer is consumed immediately.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t pointer = 0;
  while (degree[pointer] != 1) ++pointer;
  std::size_t leaf = pointer;
  for (Vertex label : sequence) {
    edges.push_back({static_cast<Vertex>(leaf), label});
    if (--degree[label] == 1 && label < pointer) {
      leaf = label;
    } else {
      ++pointer;
      while (degree[pointer] != 1) ++pointer;
      leaf = pointer;
    }
  }
  edges.push_back({static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges));
}

std::vector<Vertex> random_prufer_sequence(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random tree needs n >= 1");
  Rng rng(seed);
  std::vector<Vertex> sequence(n >= 2 ? n - 2 : 0);
  for (auto& label : sequence) label = static_cast<Vertex>(rng.below(n));
  return sequence;
}

}  // namespace onlinecolor
