#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drazin_lab/generators.hpp"
#include "drazin_lab/json_io.hpp"
#include "drazin_lab/linalg.hpp"

namespace drazin_lab {

/// Batch of generated instances. Seeds and dims are inclusive ranges.
///
/// Per seed s and dim n the batch holds CONJUGATION (mode s mod 3),
/// BLOCK_SPLIT (core mode s mod 5, nil mode (s / 5) mod 2) and
/// NEGATIVE_CONTROL over {A,B}-weak CONJUGATION pairs (target s mod 2, mode
/// 1 + (s / 2) mod 2) for every n >= 2 in range, plus one INVOLUTORY_SIM per
/// seed. Each PAPER_* family is added once.
struct SuiteConfig {
  std::uint64_t seed_first = 0;
  std::uint64_t seed_last = 0;
  std::size_t dim_first = 2;
  std::size_t dim_last = 8;
  Tolerance tol;
  unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()
};

struct SuiteCase {
  FamilySpec spec;
  std::map<RelationFlag, std::pair<bool, bool>> flags;  ///< expected, got
  std::vector<OutcomeCheck> outcomes;
  std::string error;  ///< generation failure
  [[nodiscard]] bool pass() const;
};

struct VerdictTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t hypotheses_not_met = 0;
  std::size_t error = 0;
  std::size_t mismatches = 0;
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<SuiteCase> cases;  ///< ordered by (family, seed, dim)
  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::map<std::string, VerdictTally> by_id() const;
};

/// The (family, seed, dim) cases of a config in canonical order.
std::vector<FamilySpec> suite_specs(const SuiteConfig& config);

/// Runs every case on a worker pool. Workers share nothing; results are
/// written to their canonical slot.
SuiteResult run_suite(const SuiteConfig& config);

/// Aggregate counts per id and per family, plus every failing case.
Json to_json(const SuiteResult& result);

}  // namespace drazin_lab
