#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hos/solver.hpp"

namespace hos {

enum class ExperimentKind { RandomLinear, SpectraRows, RandomSamples };

/// CLI / CSV names: "random", "spectra-rows", "samples".
std::string_view experiment_name(ExperimentKind kind);
ExperimentKind experiment_from_name(std::string_view name);

struct ExperimentSpec {
  ExperimentKind experiment = ExperimentKind::RandomLinear;
  int q = 3;
  int n = 30;
  std::vector<int> k_values;
  int trials = 100;
  SolverConfig solver;
  std::uint64_t base_seed = 0;
  double success_threshold = 5e-5;
  int threads = 0;  // 0 = hardware concurrency
};

/// One recovery attempt.  All seeds derive from
///   derive_seed(base_seed, {experiment id, K, trial, stream})
/// with stream 0 = signal, 1 = operator, 2 = solver, so per-trial records are
/// independent of which K values surround them in a sweep.
struct TrialRecord {
  std::string experiment;
  int q = 3;
  int n = 0;
  int k = 0;
  int trial = 0;
  std::uint64_t seed_signal = 0;
  std::uint64_t seed_operator = 0;
  std::uint64_t seed_solver = 0;
  double objective = 0.0;
  double error = 0.0;
  bool success = false;
  double ms = 0.0;
  std::string failure_reason;  // empty unless the trial threw
};

struct RatePoint {
  int k = 0;
  int successes = 0;
  int trials = 0;
  double rate = 0.0;
};

struct SweepResult {
  std::vector<RatePoint> table;       // sorted by K
  std::vector<TrialRecord> records;   // sorted by (K, trial)
};

/// Draws the truth signal, builds the operator, forms y = A*M_q(x) with no
/// noise, solves, and scores the orbit-aligned error.  Failures are folded
/// into the record (success = false, failure_reason set), not thrown.
TrialRecord run_trial(const ExperimentSpec& spec, int k, int trial_index);

/// Runs trials for every K, optionally across threads.  Records never depend
/// on scheduling, so serial and parallel runs produce identical tables.
SweepResult run_sweep(const ExperimentSpec& spec);

struct OutputPaths {
  std::string csv;
  std::string json;
  std::string svg;
};

/// Writes records.csv, summary.json, and rates.svg under out_dir.
/// CSV columns (fixed):
///   experiment,q,N,K,trial,seed_signal,seed_operator,seed_solver,objective,error,success,ms
OutputPaths emit_outputs(const ExperimentSpec& spec, const SweepResult& result,
                         const std::string& out_dir);

nlohmann::json spec_to_json(const ExperimentSpec& spec);
nlohmann::json summary_to_json(const ExperimentSpec& spec, const SweepResult& result);

}  // namespace hos
