#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace onlinecolor {

using Vertex = std::uint32_t;
/// Colors are the positive integers 1, 2, 3, ...; 0 means "uncolored".
using Color = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Violation {
  enum class Kind { self_loop, duplicate_edge, out_of_range };
  Kind kind;
  std::size_t edge_index;
  Edge edge;

  std::string describe() const;
};

/// Result of checking a raw edge list against the simple-graph invariants.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// First violation in edge-list order, formatted for humans. Empty when ok.
  std::string first_message() const;
};

ValidationReport validate(std::size_t vertex_count, std::span<const Edge> edges);

/// Immutable simple undirected graph on dense vertex ids [0, n).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, throwing ParameterError with the first violation if the
  /// edge list is not simple.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges normalized so that u < v, in insertion order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_tree() const { return edge_count() + 1 == vertex_count() && is_connected(); }
  bool is_forest() const;

  /// FNV-1a 64 over the canonical edge-list text (edges sorted).
  std::uint64_t content_hash() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Canonical proper 2-coloring: in every connected component the lowest-id
/// vertex is on side 1, and sides alternate along BFS layers.
struct Bipartition {
  std::vector<std::uint8_t> side;
  /// Component index per vertex, numbered by lowest member id.
  std::vector<std::uint32_t> component;
  std::size_t component_count = 0;
};

struct OddCycle {
  /// Consecutive vertices of the cycle; the last is adjacent to the first.
  std::vector<Vertex> vertices;
};

std::variant<Bipartition, OddCycle> bipartition(const Graph& graph);

/// Like bipartition() but throws NonBipartiteError carrying the cycle.
Bipartition require_bipartition(const Graph& graph);

/// True iff every vertex has a positive color and no edge is monochromatic.
bool is_proper_coloring(const Graph& graph, std::span<const Color> colors);

// Edge-list text: "n m" then m lines "u v" with 0-based ids and u < v.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& graph);
std::string to_edge_list(const Graph& graph);

}  // namespace onlinecolor
