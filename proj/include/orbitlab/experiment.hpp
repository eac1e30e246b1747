#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitlab/exactnum.hpp"
#include "orbitlab/mult1.hpp"
#include "orbitlab/projective.hpp"

namespace orbitlab {

/// Resource limits shared by every command: factorization effort plus the
/// formal-degree cap on iterate composition.
struct ExperimentBudget {
  std::uint32_t trial_bound = 1'000'000;
  std::uint64_t rho_cap = 2'000'000;
  unsigned degree_cap = kDefaultDegreeCap;

  FactorBudget factor_budget() const { return {trial_bound, rho_cap}; }
};

struct TargetSpec {
  std::string label;
  std::vector<std::string> generators;
};

/// One experiment, fully described by a JSON document. Big integers travel
/// as decimal strings (plain JSON numbers are also accepted where they fit).
struct ExperimentConfig {
  std::vector<std::string> map;       // component forms, e.g. "x0^2 + x1*x2"
  std::vector<std::string> point;     // homogeneous coordinates
  std::vector<TargetSpec> targets;
  std::vector<std::string> S;         // excluded primes
  unsigned n_max = 6;
  ExperimentBudget budget;
  std::string output;                 // CSV path; empty = stdout
  std::string cache;                  // orbit cache path; empty = no cache file
  unsigned window = 0;                // "l": exclusion window for bsum
  bool factor = false;                // ppd: attempt full prime listings

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig load(const std::string& path);
  std::string to_json_text() const;
};

/// Parsed-and-validated form of a config: every later failure is a
/// mathematical or budget event, not a shape problem.
struct Experiment {
  SelfMap f;
  ProjPoint x;
  std::vector<Subscheme> targets;
  std::vector<Int> S;

  static Experiment build(const ExperimentConfig& cfg);
};

/// Run one command against a config, writing the command's CSV table to
/// cfg.output (stdout when empty), one flushed row at a time so partial
/// tables survive abnormal exits.
///
/// Commands: orbit, heights, alpha, ratio, ppd, bsum, mult, dml-probe.
/// Conventions: `ratio` reads its target from targets[0]; `ppd` and `bsum`
/// read the divisor form from targets[0].generators[0]; `dml-probe` reads
/// its form pair from targets[0].generators[0..1].
///
/// Returns the process exit code: 0 success, 1 usage/parse/config error,
/// 2 mathematical error (indeterminate orbit, point on divisor, degenerate
/// map), 3 budget exhaustion (factorization or degree cap).
int run_command(const std::string& command, const ExperimentConfig& cfg);

}  // namespace orbitlab
