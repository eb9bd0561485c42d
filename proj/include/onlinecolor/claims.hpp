#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "onlinecolor/algorithms.hpp"

namespace onlinecolor {

struct ClaimOptions {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  ColorerFactory factory = make_colorer;
  /// Claim ids to run; empty runs all of them.
  std::set<int> selection;
};

struct ClaimResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// One-line human summary.
  std::string summary;
  /// Machine-readable evidence. Contains no timings, so it is reproducible.
  nlohmann::ordered_json evidence;
  double seconds = 0;
};

inline constexpr int kClaimCount = 10;

std::string_view claim_name(int id);

/// Runs one claim. Exceptions from the library count as a failure.
ClaimResult run_claim(int id, const ClaimOptions& options);

/// Runs the selected claims in id order.
std::vector<ClaimResult> verify_claims(const ClaimOptions& options);

/// Report without timings: byte-identical across runs with the same options.
nlohmann::ordered_json claims_json(const std::vector<ClaimResult>& results, std::uint64_t seed);

}  // namespace onlinecolor
