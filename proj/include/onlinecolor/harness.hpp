#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "onlinecolor/algorithms.hpp"
#include "onlinecolor/graph.hpp"
#include "onlinecolor/instances.hpp"
#include "onlinecolor/reveal.hpp"

namespace onlinecolor {

inline constexpr std::string_view kVersion = "onlinecolor 1.0.0";

enum class ArrivalMode { given, uniform_random };

struct ExperimentConfig {
  std::vector<InstanceSpec> instances;
  std::vector<std::string> algorithms;
  ArrivalMode arrival = ArrivalMode::uniform_random;
  /// Used with ArrivalMode::given; identity order when empty.
  std::vector<Vertex> given_order;
  /// Exact error counts injected for advice-consuming algorithms. Algorithms
  /// without advice get a single cell regardless.
  std::vector<std::size_t> k_values{0};
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Draw a fresh instance per trial for random families; otherwise use the spec's own seed.
  bool fresh_instances = true;
  double c = 4.262;
};

/// Parses the JSON config document. Throws ParameterError on missing or bad fields.
ExperimentConfig config_from_json(const nlohmann::json& document);
nlohmann::ordered_json config_json(const ExperimentConfig& config);

struct BoundCheck {
  std::string name;
  /// "per-trial" bounds hold for every trial, "mean" bounds for the cell mean.
  std::string statistic;
  /// Bound value; for per-trial bounds that depend on the trial, the tightest one met.
  double value = 0;
  double observed = 0;
  /// bound - observed, minimized over trials for per-trial bounds.
  double margin = 0;
  bool violated = false;
};

struct CellReport {
  std::size_t id = 0;
  std::string label;
  std::size_t instance_index = 0;
  InstanceSpec instance;
  std::string algorithm;
  std::optional<std::size_t> k;
  std::size_t trials = 0;
  std::map<Color, std::uint64_t> histogram;
  double mean = 0;
  double std_error = 0;
  Color min = 0;
  Color max = 0;
  Color median = 0;
  Color p90 = 0;
  Color p99 = 0;
  /// tail[l - 1] = fraction of trials with X >= l, for l = 1..max.
  std::vector<double> tail;
  double k_min_mean = 0;
  std::size_t k_min_max = 0;
  std::vector<BoundCheck> bounds;
  bool violation = false;

  /// Bound with the smallest margin, if any applies.
  const BoundCheck* critical_bound() const;
};

struct ExperimentReport {
  std::vector<CellReport> cells;
  std::string config_hash;
  std::string rng = "";
  std::string version;
  double wall_clock_seconds = 0;
  bool any_violation = false;
};

/// Deterministic in the config: trial streams are derived with split_seed
/// from (seed, instance index, trial), so all algorithms and error levels of
/// one trial see the same instance and arrival order.
ExperimentReport run_experiment(const ExperimentConfig& config, const ColorerFactory& factory = make_colorer);

nlohmann::ordered_json report_json(const ExperimentReport& report, bool include_wall_clock = true);
/// One row per cell: cell id, n, k, algorithm, trials, mean, max, bound, margin.
std::string report_csv(const ExperimentReport& report);

/// Wilson score interval for hits/trials at normal quantile z.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z);
/// Two-sided 99.9% normal quantile.
inline constexpr double kZ999 = 3.2905267314918945;

struct TailRow {
  std::size_t ell = 0;
  std::uint64_t hits = 0;
  double frequency = 0;
  double lower = 0;
  double upper = 0;
  std::optional<double> bound;
  std::string exact_bound;
  bool vacuous = false;
  bool pass = true;
};

struct TailReport {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::vector<TailRow> rows;
  bool pass = true;
};

/// Empirical P[X >= ell] over uniformly random orders of a fixed graph,
/// compared against n^2/ell! (first-fit) or k^2/floor((ell-3)/4)!
/// (parity-first-fit, ell >= 7). A row passes iff the Wilson lower limit
/// does not exceed the bound.
TailReport tail_check(const Graph& graph, std::string_view algorithm, const PredictionVector* predictions,
                      std::size_t ell_lo, std::size_t ell_hi, std::size_t trials, std::uint64_t seed,
                      const ColorerFactory& factory = make_colorer);
nlohmann::ordered_json tail_json(const TailReport& report);

struct SweepRow {
  std::size_t k = 0;
  std::size_t trials = 0;
  double mean = 0;
  Color max = 0;
  std::optional<double> bound;
  std::string bound_name;
  bool violated = false;
};

struct SweepReport {
  std::string algorithm;
  InstanceSpec instance;
  std::vector<SweepRow> rows;
  bool any_violation = false;
};

/// Max and mean X per error count under random orders, with the matching
/// worst-case error bound (2 at k = 0).
SweepReport sweep_errors(const InstanceSpec& instance, std::string_view algorithm,
                         const std::vector<std::size_t>& k_values, std::size_t trials, std::uint64_t seed,
                         std::size_t jobs = 1, const ColorerFactory& factory = make_colorer);
nlohmann::ordered_json sweep_json(const SweepReport& report);
std::string sweep_csv(const SweepReport& report);

}  // namespace onlinecolor
