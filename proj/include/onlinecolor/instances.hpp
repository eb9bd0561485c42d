#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onlinecolor/graph.hpp"

namespace onlinecolor {

enum class Family { path, star, complete_binary_tree, spider, random_labeled_tree, random_bipartite, from_file };

std::string_view family_name(Family family);
/// Throws ParameterError on unknown names.
Family parse_family(std::string_view name);

/// Whether every instance of the family is a tree. from-file is decided per graph.
bool is_tree_family(Family family);
bool is_random_family(Family family);

struct InstanceSpec {
  Family family = Family::path;
  std::size_t n = 1;
  /// Cross-edge probability for random-bipartite.
  double edge_probability = 0.5;
  /// Spider shape: one center plus `legs` paths of equal length; requires legs | n - 1.
  std::size_t legs = 0;
  std::uint64_t seed = 0;
  /// Edge-list path for from-file.
  std::string path;
};

/// Pure function of the spec: same spec, same graph.
Graph generate(const InstanceSpec& spec);

/// Decodes a Prüfer sequence of length n - 2 over labels [0, n) into its labeled tree.
Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n);

/// Uniform random Prüfer sequence, hence a uniform random labeled tree.
std::vector<Vertex> random_prufer_sequence(std::size_t n, std::uint64_t seed);

}  // namespace onlinecolor
