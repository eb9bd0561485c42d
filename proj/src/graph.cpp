#include "onlinecolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "onlinecolor/errors.hpp"

namespace onlinecolor {

std::string Violation::describe() const {
  const std::string pair = "{" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "}";
  switch (kind) {
    case Kind::self_loop:
      return "self-loop at " + std::to_string(edge.u) + " (edge #" + std::to_string(edge_index) + ")";
    case Kind::duplicate_edge:
      return "duplicate edge " + pair + " (edge #" + std::to_string(edge_index) + ")";
    case Kind::out_of_range:
      return "endpoint out of range in edge " + pair + " (edge #" + std::to_string(edge_index) + ")";
  }
  return "unknown violation";
}

std::string ValidationReport::first_message() const {
  return violations.empty() ? std::string() : violations.front().describe();
}

ValidationReport validate(std::size_t vertex_count, std::span<const Edge> edges) {
  ValidationReport report;
  std::vector<std::pair<Edge, std::size_t>> seen;
  seen.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      report.violations.push_back({Violation::Kind::out_of_range, i, e});
    } else if (e.u == e.v) {
      report.violations.push_back({Violation::Kind::self_loop, i, e});
    } else {
      seen.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, i});
    }
  }
  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.u, a.first.v) < std::tie(b.first.u, b.first.v);
  });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      report.violations.push_back({Violation::Kind::duplicate_edge, seen[i].second, edges[seen[i].second]});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) { return a.edge_index < b.edge_index; });
  return report;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) {
  if (vertex_count == 0) throw ParameterError("graph must have at least one vertex");
  const ValidationReport report = validate(vertex_count, edges);
  if (!report.ok()) throw ParameterError("invalid graph: " + report.first_message());

  adjacency_.assign(vertex_count, {});
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    const Edge normalized{std::min(e.u, e.v), std::max(e.u, e.v)};
    edges_.push_back(normalized);
    adjacency_[normalized.u].push_back(normalized.v);
    adjacency_[normalized.v].push_back(normalized.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

bool Graph::is_forest() const {
  // A graph is a forest iff |E| = n - (number of components).
  const std::size_t n = vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::size_t components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return edge_count() + components == n;
}

std::uint64_t Graph::content_hash() const {
  std::vector<Edge> sorted(edges_.begin(), edges_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::ostringstream text;
  text << vertex_count() << ' ' << sorted.size() << '\n';
  for (const Edge& e : sorted) text << e.u << ' ' << e.v << '\n';
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text.str()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::variant<Bipartition, OddCycle> bipartition(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr std::uint32_t unvisited = UINT32_MAX;
  Bipartition result;
  result.side.assign(n, 0);
  result.component.assign(n, unvisited);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::uint32_t> depth(n, 0);

  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < n; ++root) {
    if (result.component[root] != unvisited) continue;
    const auto component = static_cast<std::uint32_t>(result.component_count++);
    result.component[root] = component;
    result.side[root] = 1;
    parent[root] = root;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : graph.neighbors(x)) {
        if (result.component[y] == unvisited) {
          result.component[y] = component;
          result.side[y] = static_cast<std::uint8_t>(1 - result.side[x]);
          parent[y] = x;
          depth[y] = depth[x] + 1;
          frontier.push(y);
        } else if (result.side[y] == result.side[x]) {
          // Walk both tree paths up to their common ancestor.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // common ancestor already on the left path
          OddCycle cycle;
          cycle.vertices.assign(left.rbegin(), left.rend());
          cycle.vertices.insert(cycle.vertices.end(), right.begin(), right.end());
          return cycle;
        }
      }
    }
  }
  return result;
}

Bipartition require_bipartition(const Graph& graph) {
  auto result = bipartition(graph);
  if (auto* cycle = std::get_if<OddCycle>(&result)) {
    std::string text;
    for (Vertex v : cycle->vertices) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw NonBipartiteError("graph is not bipartite; odd cycle (" + text + ")");
  }
  return std::get<Bipartition>(std::move(result));
}

bool is_proper_coloring(const Graph& graph, std::span<const Color> colors) {
  if (colors.size() != graph.vertex_count()) return false;
  if (std::any_of(colors.begin(), colors.end(), [](Color c) { return c == 0; })) return false;
  return std::none_of(graph.edges().begin(), graph.edges().end(),
                      [&](const Edge& e) { return colors[e.u] == colors[e.v]; });
}

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw FormatError(line_no + 1, "missing header \"n m\"");

  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) throw FormatError(line_no, "header must be \"n m\"");
  }
  if (n < 1) throw FormatError(line_no, "vertex count must be positive");
  if (m < 0) throw FormatError(line_no, "edge count must be non-negative");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) {
      throw FormatError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw FormatError(line_no, "edge line must be \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError(line_no, "endpoint out of range");
    if (u == v) throw FormatError(line_no, "self-loop at " + std::to_string(u));
    if (u > v) throw FormatError(line_no, "edge endpoints must satisfy u < v");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    seen.push_back({edges.back(), line_no});
  }
  if (next_data_line(in, line, line_no)) throw FormatError(line_no, "unexpected trailing content");

  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.u, a.first.v) < std::tie(b.first.u, b.first.v);
  });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) throw FormatError(seen[i].second, "duplicate edge");
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& graph) {
  std::ostringstream out;
  write_edge_list(out, graph);
  return out.str();
}

}  // namespace onlinecolor
