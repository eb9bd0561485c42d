#include "onlinecolor/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "onlinecolor/errors.hpp"

namespace onlinecolor {

Rational ExactDistribution::probability(Color x) const {
  const auto it = counts.find(x);
  return Rational(it == counts.end() ? 0 : it->second, total_orders);
}

Rational ExactDistribution::tail(Color ell) const {
  std::uint64_t hits = 0;
  for (auto it = counts.lower_bound(ell); it != counts.end(); ++it) hits += it->second;
  return Rational(hits, total_orders);
}

Rational ExactDistribution::expectation() const {
  BigInt weighted = 0;
  for (const auto& [x, count] : counts) weighted += BigInt(x) * count;
  return Rational(weighted, total_orders);
}

ExactDistribution enumerate_orders(const Graph& graph, std::string_view algorithm,
                                   const PredictionVector* predictions, const EnumerationOptions& options) {
  const std::size_t n = graph.vertex_count();
  if (n > options.max_vertices) {
    throw ParameterError("exact enumeration refused: n = " + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(options.max_vertices) + " (use Monte Carlo instead)");
  }
  if (n > 20) throw ParameterError("exact enumeration supports at most 20 vertices");
  if (algorithm_uses_advice(algorithm) && predictions == nullptr) {
    throw ConfigurationError(std::string(algorithm) + " needs predictions");
  }

  // One block per first vertex; blocks are claimed by workers in any order,
  // and exact counts make the merge order-independent.
  std::atomic<std::size_t> next_block{0};
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.jobs, n));
  std::vector<std::map<Color, std::uint64_t>> partial(workers);
  auto work = [&](std::size_t worker) {
    auto colorer = options.factory(algorithm);
    ArrivalOrder order = ArrivalOrder::identity(n);
    for (std::size_t first = next_block++; first < n; first = next_block++) {
      order.order.clear();
      order.order.push_back(static_cast<Vertex>(first));
      for (Vertex v = 0; v < n; ++v) {
        if (v != first) order.order.push_back(v);
      }
      do {
        const Transcript transcript = run(graph, order, predictions, *colorer, RecordMode::colors_only);
        ++partial[worker][transcript.colors_used];
      } while (std::next_permutation(order.order.begin() + 1, order.order.end()));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  ExactDistribution result;
  result.instance_hash = graph.content_hash();
  result.algorithm = std::string(algorithm);
  result.n = n;
  result.total_orders = factorial(n).convert_to<std::uint64_t>();
  for (const auto& counts : partial) {
    for (const auto& [x, count] : counts) result.counts[x] += count;
  }
  return result;
}

nlohmann::ordered_json exact_json(const ExactDistribution& distribution) {
  nlohmann::ordered_json out;
  out["instance_hash"] = hex64(distribution.instance_hash);
  out["algorithm"] = distribution.algorithm;
  out["n"] = distribution.n;
  out["orders"] = std::to_string(distribution.total_orders);
  nlohmann::ordered_json probabilities = nlohmann::ordered_json::object();
  for (const auto& [x, count] : distribution.counts) {
    probabilities[std::to_string(x)] = rational_string(distribution.probability(x));
  }
  out["P[X]"] = std::move(probabilities);
  nlohmann::ordered_json tails = nlohmann::ordered_json::object();
  for (Color ell = 1; ell <= distribution.max_colors(); ++ell) {
    tails[std::to_string(ell)] = rational_string(distribution.tail(ell));
  }
  out["P[X>=l]"] = std::move(tails);
  out["E[X]"] = rational_string(distribution.expectation());
  return out;
}

OrientedReachTree reach_tree(const Graph& graph, std::span<const std::uint32_t> arrival, Vertex v) {
  if (!graph.is_forest()) throw ParameterError("reach_tree is defined on forests only");
  if (arrival.size() != graph.vertex_count()) throw ParameterError("arrival times do not cover the graph");
  if (v >= graph.vertex_count()) throw ParameterError("vertex out of range");

  OrientedReachTree tree;
  tree.root = v;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    tree.members.push_back(x);
    for (Vertex u : graph.neighbors(x)) {
      // In a forest each u reached this way is new: the only path back is via x.
      if (arrival[u] < arrival[x]) {
        tree.in_edges.push_back({u, x});
        stack.push_back(u);
      }
    }
  }
  std::sort(tree.members.begin(), tree.members.end());
  return tree;
}

namespace {

/// Vertices of the transcript in arrival order, validated against the graph.
std::vector<Vertex> arrival_sequence(const Transcript& transcript, const Graph& graph) {
  std::vector<Vertex> order = transcript.order();
  validate_order(order, graph.vertex_count());
  return order;
}

}  // namespace

WitnessReport check_increasing_paths(const Transcript& transcript, const Graph& graph) {
  const std::vector<Vertex> order = arrival_sequence(transcript, graph);
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint32_t> time(n);
  for (std::uint32_t i = 0; i < n; ++i) time[order[i]] = i;

  // best[v]: vertices on the longest path ending at v with increasing arrival.
  std::vector<std::uint32_t> best(n, 0);
  WitnessReport report;
  for (Vertex v : order) {
    std::uint32_t longest = 0;
    for (Vertex u : graph.neighbors(v)) {
      if (time[u] < time[v]) longest = std::max(longest, best[u]);
    }
    best[v] = longest + 1;
    const Color color = transcript.colors.at(v);
    ++report.checked;
    if (best[v] < color) report.violations.push_back({v, color, color, best[v]});
  }
  if (!report.ok()) report.table = std::move(best);
  return report;
}

WitnessReport check_error_paths(const Transcript& transcript, const Graph& graph,
                                const PredictionVector& predictions) {
  const std::vector<Vertex> order = arrival_sequence(transcript, graph);
  const std::size_t n = graph.vertex_count();
  if (predictions.size() != n) throw ParameterError("predictions do not cover the graph");
  std::vector<std::uint32_t> time(n);
  for (std::uint32_t i = 0; i < n; ++i) time[order[i]] = i;

  // errors[v]: most wrongly predicted vertices on an increasing path ending at v.
  std::vector<std::uint32_t> errors(n, 0);
  WitnessReport report;
  for (Vertex v : order) {
    std::uint32_t most = 0;
    for (Vertex u : graph.neighbors(v)) {
      if (time[u] < time[v]) most = std::max(most, errors[u]);
    }
    errors[v] = most + (predictions.delivered[v] != predictions.truth[v] ? 1 : 0);
    const Color color = transcript.colors.at(v);
    const std::size_t required = (color - 1) / 4;
    ++report.checked;
    if (errors[v] < required) report.violations.push_back({v, color, required, errors[v]});
  }
  if (!report.ok()) report.table = std::move(errors);
  return report;
}

std::vector<std::vector<std::uint32_t>> rooted_level_sequences(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> levels(n);
  std::iota(levels.begin(), levels.end(), 1U);  // the path, rooted at an end
  while (true) {
    out.push_back(levels);
    // p: last position deeper than level 2; none left means the star.
    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;) {
      if (levels[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (levels[q] != levels[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
  return out;
}

Graph tree_from_level_sequence(std::span<const std::uint32_t> levels) {
  if (levels.empty() || levels[0] != 1) throw ParameterError("level sequence must start at the root level 1");
  std::vector<Edge> edges;
  // last[d]: most recent vertex seen at depth d.
  std::vector<Vertex> last(levels.size() + 2, 0);
  last[1] = 0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const std::uint32_t depth = levels[i];
    if (depth < 2 || depth > levels[i - 1] + 1) throw ParameterError("invalid level sequence");
    edges.push_back({last[depth - 1], static_cast<Vertex>(i)});
    last[depth] = static_cast<Vertex>(i);
  }
  return Graph(levels.size(), std::move(edges));
}

namespace {

std::string rooted_form(const Graph& tree, Vertex root) {
  std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex u : tree.neighbors(v)) {
      if (u != parent) children.push_back(encode(u, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& child : children) out += child;
    return out + ")";
  };
  return encode(root, root);
}

}  // namespace

std::string free_tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw ParameterError("canonical form needs a tree");
  const std::size_t n = tree.vertex_count();
  if (n == 1) return "()";
  // Peel leaves layer by layer; the last one or two vertices are the centers.
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex u : tree.neighbors(leaf)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::string best = rooted_form(tree, layer[0]);
  for (std::size_t i = 1; i < layer.size(); ++i) best = std::min(best, rooted_form(tree, layer[i]));
  return best;
}

std::vector<Graph> nonisomorphic_trees(std::size_t n) {
  if (n < 1) throw ParameterError("trees need n >= 1");
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const auto& levels : rooted_level_sequences(n)) {
    Graph tree = tree_from_level_sequence(levels);
    if (seen.insert(free_tree_canonical_form(tree)).second) out.push_back(std::move(tree));
  }
  return out;
}

}  // namespace onlinecolor
