#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgan/engine.hpp"
#include "qgan/ratio.hpp"
#include "qgan/rng.hpp"

namespace qgan {

/// Haar-random pure state: 2^n independent complex standard normals,
/// normalized. Requires 1 <= n <= 8.
TargetState sample_target(int n, Rng& rng);

/// One randomized trial: its target and both initialization seeds. Derived
/// deterministically from (master_seed, trial_index), so every ratio in a
/// sweep sees the identical trial set.
struct TrialSpec {
  int trial_index = 0;
  TargetState target;
  std::uint64_t target_seed = 0;
  std::uint64_t gen_seed = 0;
  std::uint64_t disc_seed = 0;
};

std::vector<TrialSpec> make_trial_specs(int n_qubits, int trials,
                                        std::uint64_t master_seed);

struct SweepConfig {
  int n_qubits = 2;
  int trials = 25;
  std::vector<Ratio> ratios;
  int epochs = 100;
  std::uint64_t master_seed = 0;
  AdamConfig adam{};
  int jobs = 1;
  // when non-empty, finished (ratio, trial) pairs are persisted there and
  // reloaded on rerun instead of recomputed
  std::string resume_dir;
};

struct SweepResult {
  SweepConfig config;  // ratios sorted ascending
  std::vector<TrialSpec> specs;
  std::vector<std::vector<TrialResult>> results;  // [ratio][trial]
};

/// Trains every (ratio, trial) pair over the shared trial set. Work items
/// run on a bounded pool of config.jobs threads; the result is bit-identical
/// for any jobs value.
SweepResult run_sweep(const SweepConfig& config);

/// Content key for one (ratio, trial) work item; names the resume file.
std::string trial_key(const SweepConfig& config, const Ratio& ratio,
                      const TrialSpec& spec);

struct AggregateCurves {
  std::vector<Ratio> ratios;
  // [ratio][epoch-1]: KL across trials at that epoch
  std::vector<std::vector<double>> mean_kl;
  std::vector<std::vector<double>> min_kl;
};

struct CaseSettings {
  Ratio ratio{};
  int epochs = 0;
  double kl = 0.0;
};

/// Fig-15-style summary: the (ratio, epoch count) minimizing final KL for
/// the average case (mean curve) and the best case (min curve).
struct BestSettings {
  CaseSettings average_case;
  CaseSettings best_case;
};

/// Mean and min KL over trials per (ratio, epoch), plus the best settings;
/// ties break toward fewer epochs, then the smaller ratio.
std::pair<AggregateCurves, BestSettings> aggregate_and_best(
    const SweepResult& sweep);

}  // namespace qgan
