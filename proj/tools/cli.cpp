#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "onlinecolor/adversary.hpp"
#include "onlinecolor/algorithms.hpp"
#include "onlinecolor/analysis.hpp"
#include "onlinecolor/bounds.hpp"
#include "onlinecolor/claims.hpp"
#include "onlinecolor/errors.hpp"
#include "onlinecolor/harness.hpp"
#include "onlinecolor/instances.hpp"
#include "onlinecolor/mutants.hpp"
#include "onlinecolor/reveal.hpp"

namespace onlinecolor::cli {

namespace {

/// Flag combinations CLI11 cannot express; reported like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string family;
  std::size_t n = 0;
  double p = 0.5;
  std::size_t legs = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string in;
  std::string algo;
  std::string order;
  std::optional<std::size_t> k;
  std::string k_list;
  std::string error_mode = "none";
  std::string errors;
  std::optional<std::size_t> trials;
  std::string ell;
  std::size_t jobs = 1;
  std::string format = "json";
  std::string config;
  std::string csv;
  std::string replay;
  std::string kind;
  std::optional<double> c;
  std::optional<std::size_t> s;
  std::string claims;
  std::string mutate;
};

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string("bad ") + what + " list entry '" + item + "'");
    }
    values.push_back(value);
    start = end + 1;
  }
  return values;
}

std::uint64_t require_seed(const Flags& flags, const char* purpose) {
  if (!flags.seed) throw UsageError(std::string("--seed is required ") + purpose);
  return *flags.seed;
}

InstanceSpec instance_spec(const Flags& flags) {
  InstanceSpec spec;
  spec.family = parse_family(flags.family);
  spec.n = flags.n;
  spec.edge_probability = flags.p;
  spec.legs = flags.legs;
  spec.path = flags.in;
  if (is_random_family(spec.family)) spec.seed = require_seed(flags, "for random families");
  return spec;
}

Graph load_graph(const Flags& flags) {
  if (!flags.in.empty()) return read_edge_list_file(flags.in);
  if (flags.family.empty()) throw UsageError("give --in FILE or --family");
  return generate(instance_spec(flags));
}

ArrivalOrder parse_order(const std::string& text, const Graph& graph) {
  if (text.empty() || text == "identity") return ArrivalOrder::identity(graph.vertex_count());
  if (text.rfind("random:", 0) == 0) {
    const auto seed = parse_list(text.substr(7), "seed");
    if (seed.size() != 1) throw UsageError("--order random:SEED takes one seed");
    return sample_order(graph.vertex_count(), seed.front());
  }
  std::vector<Vertex> order;
  for (std::uint64_t v : parse_list(text, "order")) order.push_back(static_cast<Vertex>(v));
  validate_order(order, graph.vertex_count());
  return ArrivalOrder::given(std::move(order));
}

/// Predictions for advice algorithms; none for the others.
std::optional<PredictionVector> build_predictions(const Flags& flags, const Graph& graph) {
  if (!algorithm_uses_advice(flags.algo)) {
    if (flags.error_mode != "none" || flags.k || !flags.errors.empty()) {
      throw ParameterError("algorithm '" + flags.algo + "' takes no predictions");
    }
    return std::nullopt;
  }
  const Bipartition sides = require_bipartition(graph);
  if (flags.error_mode == "none") return make_predictions(sides);
  if (flags.error_mode == "random") {
    if (!flags.k) throw UsageError("--error-mode random needs --k");
    return make_predictions_random(sides, *flags.k, require_seed(flags, "for --error-mode random"));
  }
  if (flags.errors.empty()) return make_predictions_explicit(sides, {});
  std::vector<Vertex> ids;
  for (std::uint64_t v : parse_list(flags.errors, "error")) ids.push_back(static_cast<Vertex>(v));
  return make_predictions_explicit(sides, ids);
}

/// Writes to --out when given, else to the output stream.
void emit(const Flags& flags, std::ostream& out, const std::string& text) {
  if (flags.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) throw ParameterError("cannot write '" + flags.out + "'");
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot write '" + path + "'");
  file << text;
}

int cmd_generate(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Graph graph = generate(instance_spec(flags));
  emit(flags, out, to_edge_list(graph));
  err << "generated " << flags.family << " with " << graph.vertex_count() << " vertices, " << graph.edge_count()
      << " edges\n";
  return kOk;
}

int cmd_run(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Graph graph = load_graph(flags);
  if (!flags.replay.empty()) {
    std::ifstream file(flags.replay);
    if (!file) throw ParameterError("cannot read '" + flags.replay + "'");
    const auto recorded = nlohmann::json::parse(file);
    std::vector<Vertex> order;
    std::vector<std::uint8_t> delivered(graph.vertex_count(), 0);
    bool has_advice = false;
    for (const auto& step : recorded.at("steps")) {
      const auto v = step.at("vertex").get<Vertex>();
      order.push_back(v);
      if (step.contains("advice") && !step.at("advice").is_null()) {
        has_advice = true;
        if (v < delivered.size()) delivered[v] = step.at("advice").get<int>() != 0;
      }
    }
    const std::string algorithm = recorded.at("algorithm").get<std::string>();
    std::optional<PredictionVector> predictions;
    if (has_advice) predictions = predictions_from_delivered(require_bipartition(graph), delivered);
    auto colorer = make_colorer(algorithm);
    const Transcript transcript = run(graph, ArrivalOrder::given(order), predictions ? &*predictions : nullptr, *colorer);
    std::size_t mismatches = 0;
    const auto& steps = recorded.at("steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].at("color").get<Color>() != transcript.steps[i].color) ++mismatches;
    }
    emit(flags, out, transcript_json(transcript).dump(2) + "\n");
    err << "replayed " << steps.size() << " steps of " << algorithm << ": " << mismatches << " color mismatches\n";
    return mismatches == 0 ? kOk : kViolation;
  }
  if (flags.algo.empty()) throw UsageError("--algo is required");
  const ArrivalOrder order = parse_order(flags.order, graph);
  const auto predictions = build_predictions(flags, graph);
  auto colorer = make_colorer(flags.algo);
  const Transcript transcript = run(graph, order, predictions ? &*predictions : nullptr, *colorer);
  emit(flags, out, transcript_json(transcript).dump(2) + "\n");
  err << flags.algo << " on " << graph.vertex_count() << " vertices used " << transcript.colors_used << " colors";
  if (predictions) err << " (k = " << predictions->k << ", k_min = " << predictions->k_min << ")";
  err << "\n";
  return kOk;
}

int cmd_exact(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.algo.empty()) throw UsageError("--algo is required");
  const Graph graph = load_graph(flags);
  const auto predictions = build_predictions(flags, graph);
  EnumerationOptions options;
  options.jobs = flags.jobs;
  const ExactDistribution distribution =
      enumerate_orders(graph, flags.algo, predictions ? &*predictions : nullptr, options);
  emit(flags, out, exact_json(distribution).dump(2) + "\n");
  err << flags.algo << " over " << distribution.total_orders << " orders: E[X] = "
      << rational_string(distribution.expectation()) << "\n";
  return kOk;
}

int cmd_adversary(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.algo.empty()) throw UsageError("--algo is required");
  if (flags.ell.empty()) throw UsageError("--ell is required");
  const auto ell = parse_list(flags.ell, "ell");
  if (ell.size() != 1) throw UsageError("--ell takes one value");
  auto colorer = make_colorer(flags.algo);
  const AdversaryOutcome outcome = force(ell.front(), *colorer);
  out << adversary_json(outcome).dump(2) << "\n";
  if (!flags.out.empty()) write_file(flags.out, to_edge_list(outcome.graph));
  err << "verdict " << verdict_name(outcome.verdict) << "(" << outcome.target << "): " << outcome.colors_used()
      << " colors on " << outcome.vertices_used << " vertices\n";
  return kOk;
}

void print_report_summary(const ExperimentReport& report, std::ostream& err) {
  for (const auto& cell : report.cells) {
    err << cell.label << ": mean " << cell.mean << ", max " << cell.max;
    if (const BoundCheck* bound = cell.critical_bound()) {
      err << ", " << bound->name << " margin " << bound->margin;
    }
    if (cell.violation) err << "  ** BOUND VIOLATION **";
    err << "\n";
  }
}

int cmd_experiment(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.config.empty()) throw UsageError("--config is required");
  std::ifstream file(flags.config);
  if (!file) throw ParameterError("cannot read '" + flags.config + "'");
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(file);
  } catch (const nlohmann::json::parse_error& error) {
    throw ParameterError(std::string("config is not valid JSON: ") + error.what());
  }
  if (!document.contains("seed") && !flags.seed) throw UsageError("the config needs a seed (or pass --seed)");
  if (flags.seed) document["seed"] = *flags.seed;
  if (flags.trials) document["trials"] = *flags.trials;
  ExperimentConfig config = config_from_json(document);
  if (flags.jobs > 1) config.jobs = flags.jobs;
  const ExperimentReport report = run_experiment(config);
  emit(flags, out, flags.format == "csv" ? report_csv(report) : report_json(report).dump(2) + "\n");
  if (!flags.csv.empty()) write_file(flags.csv, report_csv(report));
  print_report_summary(report, err);
  return report.any_violation ? kViolation : kOk;
}

int cmd_sweep(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.algo.empty()) throw UsageError("--algo is required");
  if (flags.k_list.empty()) throw UsageError("--k is required");
  if (!flags.trials) throw UsageError("--trials is required");
  const std::uint64_t seed = require_seed(flags, "for sweep");
  InstanceSpec spec;
  if (!flags.in.empty()) {
    spec.family = Family::from_file;
    spec.path = flags.in;
  } else {
    spec = instance_spec(flags);
  }
  std::vector<std::size_t> ks;
  for (std::uint64_t k : parse_list(flags.k_list, "k")) ks.push_back(k);
  const SweepReport report = sweep_errors(spec, flags.algo, ks, *flags.trials, seed, flags.jobs);
  emit(flags, out, flags.format == "csv" ? sweep_csv(report) : sweep_json(report).dump(2) + "\n");
  if (!flags.csv.empty()) write_file(flags.csv, sweep_csv(report));
  for (const auto& row : report.rows) {
    err << "k=" << row.k << ": max " << row.max << ", mean " << row.mean;
    if (row.bound) err << ", bound " << *row.bound;
    if (row.violated) err << "  ** BOUND VIOLATION **";
    err << "\n";
  }
  return report.any_violation ? kViolation : kOk;
}

int cmd_check_bounds(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.kind.empty() || flags.kind == "list") {
    for (auto kind : bounds::kinds()) out << kind << "\n";
    return kOk;
  }
  // With an instance, compare the empirical tail against the bound.
  if (!flags.in.empty() || !flags.family.empty()) {
    const std::string algorithm = flags.kind == "first-fit-tail"          ? "first-fit"
                                  : flags.kind == "parity-first-fit-tail" ? "parity-first-fit"
                                                                          : "";
    if (algorithm.empty()) throw UsageError("empirical checks support first-fit-tail and parity-first-fit-tail");
    if (!flags.trials) throw UsageError("--trials is required");
    if (flags.ell.empty()) throw UsageError("--ell LO[:HI] is required");
    const std::uint64_t seed = require_seed(flags, "for the empirical tail check");
    const Graph graph = load_graph(flags);
    std::size_t lo = 0;
    std::size_t hi = 0;
    const auto colon = flags.ell.find(':');
    lo = parse_list(flags.ell.substr(0, colon), "ell").at(0);
    hi = colon == std::string::npos ? lo : parse_list(flags.ell.substr(colon + 1), "ell").at(0);
    Flags with_algo = flags;
    with_algo.algo = algorithm;
    const auto predictions = build_predictions(with_algo, graph);
    const TailReport report =
        tail_check(graph, algorithm, predictions ? &*predictions : nullptr, lo, hi, *flags.trials, seed);
    emit(flags, out, tail_json(report).dump(2) + "\n");
    for (const auto& row : report.rows) {
      err << "ell=" << row.ell << ": frequency " << row.frequency << " [" << row.lower << ", " << row.upper << "]";
      if (row.bound) err << " vs bound " << *row.bound << (row.vacuous ? " (vacuous)" : "");
      err << (row.pass ? "" : "  ** FAIL **") << "\n";
    }
    return report.pass ? kOk : kViolation;
  }
  std::map<std::string, double> parameters;
  if (flags.n) parameters["n"] = static_cast<double>(flags.n);
  if (flags.k) parameters["k"] = static_cast<double>(*flags.k);
  if (!flags.ell.empty()) parameters["ell"] = static_cast<double>(parse_list(flags.ell, "ell").at(0));
  if (flags.c) parameters["c"] = *flags.c;
  if (flags.s) parameters["s"] = static_cast<double>(*flags.s);
  const bounds::Evaluation evaluation = bounds::evaluate(flags.kind, parameters);
  nlohmann::ordered_json json{{"kind", evaluation.kind},
                              {"formula", evaluation.formula},
                              {"parameters", parameters},
                              {"value", evaluation.value}};
  if (!evaluation.exact.empty()) json["exact"] = evaluation.exact;
  json["holds"] = evaluation.holds;
  emit(flags, out, json.dump(2) + "\n");
  err << evaluation.kind << " = " << evaluation.value << (evaluation.holds ? "" : "  ** DOES NOT HOLD **") << "\n";
  return evaluation.holds ? kOk : kViolation;
}

int cmd_verify_claims(const Flags& flags, std::ostream& out, std::ostream& err) {
  ClaimOptions options;
  options.seed = require_seed(flags, "for verify-claims");
  options.jobs = flags.jobs;
  if (!flags.mutate.empty()) options.factory = mutated_factory(flags.mutate);
  if (!flags.claims.empty()) {
    for (std::uint64_t id : parse_list(flags.claims, "claim")) options.selection.insert(static_cast<int>(id));
  }
  const auto results = verify_claims(options);
  bool all = true;
  for (const auto& result : results) {
    all = all && result.pass;
    err << (result.pass ? "PASS " : "FAIL ") << result.id << " " << result.name << " (" << result.seconds
        << " s): " << result.summary << "\n";
  }
  emit(flags, out, claims_json(results, options.seed).dump(2) + "\n");
  return all ? kOk : kViolation;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online graph coloring with and without predictions", "onlinecolor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Flags flags;

  const auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--family", flags.family, "Instance family")
        ->check(CLI::IsMember({"path", "star", "complete-binary-tree", "spider", "random-labeled-tree",
                               "random-bipartite", "from-file"}));
    sub->add_option("--n", flags.n, "Vertex count");
    sub->add_option("--p", flags.p, "Edge probability for random-bipartite");
    sub->add_option("--legs", flags.legs, "Leg count for spider");
    sub->add_option("--in", flags.in, "Edge-list file");
  };
  const auto add_predictions = [&](CLI::App* sub) {
    sub->add_option("--k", flags.k, "Number of prediction errors");
    sub->add_option("--error-mode", flags.error_mode, "How errors are placed")
        ->check(CLI::IsMember({"none", "random", "explicit"}));
    sub->add_option("--errors", flags.errors, "Comma-separated ids with wrong predictions");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--csv", flags.csv, "Also write the CSV report here");
  };
  const auto algo_check = CLI::IsMember(std::vector<std::string>(algorithm_names().begin(), algorithm_names().end()));

  auto* generate_cmd = app.add_subcommand("generate", "Write an instance as an edge list");
  add_instance(generate_cmd);
  generate_cmd->add_option("--seed", flags.seed, "Seed for random families");
  generate_cmd->add_option("--out", flags.out, "Output file (default stdout)");

  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on one arrival order");
  add_instance(run_cmd);
  add_predictions(run_cmd);
  run_cmd->add_option("--algo", flags.algo, "Algorithm")->check(algo_check);
  run_cmd->add_option("--order", flags.order, "Comma-separated ids, identity, or random:SEED");
  run_cmd->add_option("--seed", flags.seed, "Seed for random families and random errors");
  run_cmd->add_option("--replay", flags.replay, "Transcript JSON to replay and compare");
  run_cmd->add_option("--out", flags.out, "Transcript output file");

  auto* exact_cmd = app.add_subcommand("exact", "Exact distribution of X over all arrival orders");
  add_instance(exact_cmd);
  add_predictions(exact_cmd);
  exact_cmd->add_option("--algo", flags.algo, "Algorithm")->check(algo_check);
  exact_cmd->add_option("--seed", flags.seed, "Seed for random families and random errors");
  exact_cmd->add_option("--jobs", flags.jobs, "Worker threads");
  exact_cmd->add_option("--out", flags.out, "Output file");

  auto* adversary_cmd = app.add_subcommand("adversary", "Play the forcing adversary against an advice algorithm");
  adversary_cmd->add_option("--algo", flags.algo, "Algorithm")->check(algo_check);
  adversary_cmd->add_option("--ell", flags.ell, "Number of colors to force");
  adversary_cmd->add_option("--out", flags.out, "Edge-list file for the built tree");

  auto* experiment_cmd = app.add_subcommand("experiment", "Run a Monte Carlo experiment from a JSON config");
  experiment_cmd->add_option("--config", flags.config, "Config file");
  experiment_cmd->add_option("--seed", flags.seed, "Overrides the config seed");
  experiment_cmd->add_option("--trials", flags.trials, "Overrides the config trial count");
  experiment_cmd->add_option("--jobs", flags.jobs, "Worker threads");
  experiment_cmd->add_option("--out", flags.out, "Report file");
  add_format(experiment_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Colors used versus number of prediction errors");
  add_instance(sweep_cmd);
  sweep_cmd->add_option("--algo", flags.algo, "Advice algorithm")->check(algo_check);
  sweep_cmd->add_option("--k", flags.k_list, "Comma-separated error counts");
  sweep_cmd->add_option("--trials", flags.trials, "Trials per error count");
  sweep_cmd->add_option("--seed", flags.seed, "Master seed");
  sweep_cmd->add_option("--jobs", flags.jobs, "Worker threads");
  sweep_cmd->add_option("--out", flags.out, "Report file");
  add_format(sweep_cmd);

  auto* bounds_cmd = app.add_subcommand("check-bounds", "Evaluate a bound, or test it against simulation");
  bounds_cmd->add_option("--kind", flags.kind, "Bound name, or 'list'");
  add_instance(bounds_cmd);
  add_predictions(bounds_cmd);
  bounds_cmd->add_option("--ell", flags.ell, "Color threshold, LO[:HI] for empirical checks");
  bounds_cmd->add_option("--c", flags.c, "Constant c");
  bounds_cmd->add_option("--s", flags.s, "Start index s of the factorial tail sum");
  bounds_cmd->add_option("--trials", flags.trials, "Trials for empirical checks");
  bounds_cmd->add_option("--seed", flags.seed, "Seed for empirical checks");
  bounds_cmd->add_option("--out", flags.out, "Output file");

  auto* claims_cmd = app.add_subcommand("verify-claims", "Run the acceptance claims");
  claims_cmd->add_option("--seed", flags.seed, "Master seed")->required();
  claims_cmd->add_option("--jobs", flags.jobs, "Worker threads");
  claims_cmd->add_option("--claims", flags.claims, "Comma-separated claim ids (default all)");
  claims_cmd->add_option("--mutate", flags.mutate, "Swap in a deliberately broken algorithm")->check(algo_check);
  claims_cmd->add_option("--out", flags.out, "Machine report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(flags, out, err);
    if (*run_cmd) return cmd_run(flags, out, err);
    if (*exact_cmd) return cmd_exact(flags, out, err);
    if (*adversary_cmd) return cmd_adversary(flags, out, err);
    if (*experiment_cmd) return cmd_experiment(flags, out, err);
    if (*sweep_cmd) return cmd_sweep(flags, out, err);
    if (*bounds_cmd) return cmd_check_bounds(flags, out, err);
    if (*claims_cmd) return cmd_verify_claims(flags, out, err);
  } catch (const UsageError& error) {
    err << "usage error: " << error.what() << "\n";
    return kUsage;
  } catch (const ProtocolViolation& error) {
    err << "protocol violation: " << error.what() << "\n";
    return kViolation;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return kDomain;
  } catch (const nlohmann::json::exception& error) {
    err << "error: " << error.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace onlinecolor::cli
