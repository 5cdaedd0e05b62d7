#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circanon/brute_force.hpp"
#include "circanon/sampling.hpp"

namespace circanon::exp {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// 95% score interval by default; preferred over the normal approximation
/// for small failure counts.
WilsonInterval wilson(long long successes, long long trials, double z = 1.959964);

enum class ExperimentKind { simple_spectrum, saturated, collision_3p, canon_pipeline };

const char* experiment_name(ExperimentKind k);
std::optional<ExperimentKind> parse_experiment_name(const std::string& name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::simple_spectrum;
  std::vector<int> ns;
  long long trials = 1000;
  ModelKind model = ModelKind::cayley;
  /// canon-pipeline only; simple-spectrum/3p-collision force digraphs and
  /// saturated forces graphs.
  bool directed = true;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Exact walk/spectral cross-verification runs on every stride-th trial.
  int cross_check_stride = 32;
  /// Trend assertion f(n) <= bound_constant / sqrt(n).
  double bound_constant = 3.0;
  /// Relative tolerance for the 3p-collision agreement assertion.
  double relative_tolerance = 0.10;
};

struct TrialRecord {
  int n = 0;
  long long trial = 0;
  std::uint64_t seed = 0;
  // Verdicts: 1 = true, 0 = false, -1 = not computed.
  int simple = -1;
  int saturated = -1;
  int walk_discrete = -1;
  int walk_saturated = -1;
  int canon_success = -1;
  int ccr_success = -1;
  int firm = -1;
  int multiplier_free = -1;
  long long micros = 0;
};

struct PerNSummary {
  int n = 0;
  long long trials = 0;
  long long events = 0;  // experiment-specific event count (failures/collisions)
  double rate = 0.0;
  WilsonInterval interval;
  double median_micros = 0.0;
  double reference = 0.0;  // e.g. the exact collision probability
};

struct ExperimentResult {
  std::string csv;
  bool assertions_passed = true;
  std::vector<std::string> assertion_failures;
  std::vector<PerNSummary> per_n;
  double slope = 0.0;  // canon-pipeline log-log runtime slope
};

/// Runs the experiment; deterministic in all semantic content for a fixed
/// spec (timing columns are the only nondeterministic bytes).
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Exact collision probability C(2p, p) / 4^p of the n = 3p construction.
double exact_collision_probability(int p);

}  // namespace circanon::exp
