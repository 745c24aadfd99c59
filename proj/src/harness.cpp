#include "qgan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "qgan/serialize.hpp"

namespace qgan {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string format_u64_hex(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016" PRIx64, value);
  return buffer;
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

// runs fn(0..count-1) over `jobs` worker threads; items must not share
// mutable state so scheduling order cannot affect results
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  const int workers = std::clamp<int>(jobs, 1, static_cast<int>(count ? count : 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

TrainingConfig training_config_for(const SweepConfig& config, const Ratio& ratio) {
  TrainingConfig training;
  training.n_qubits = config.n_qubits;
  training.epochs = config.epochs;
  training.ratio = ratio;
  training.adam = config.adam;
  training.seed = config.master_seed;
  return training;
}

bool matches_work_item(const TrialResult& result, const TrainingConfig& expected,
                       const TrialSpec& spec) {
  return result.config.n_qubits == expected.n_qubits &&
         result.config.epochs == expected.epochs &&
         result.config.ratio == expected.ratio &&
         result.gen_seed == spec.gen_seed &&
         result.disc_seed == spec.disc_seed &&
         result.records.size() == static_cast<std::size_t>(expected.epochs);
}

std::optional<TrialResult> load_trial(const fs::path& file,
                                      const TrainingConfig& expected,
                                      const TrialSpec& spec) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    TrialResult result = trial_result_from_json(j);
    if (!matches_work_item(result, expected, spec)) return std::nullopt;
    return result;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable or stale file: recompute
  }
}

void store_trial(const fs::path& file, const TrialResult& result) {
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << to_json(result).dump();
  }
  fs::rename(tmp, file);
}

}  // namespace

TargetState sample_target(int n, Rng& rng) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("target sampling requires 1 to 8 qubits");
  }
  std::vector<std::complex<double>> amps(std::size_t{1} << n);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    const auto [re, im] = rng.normal_pair();
    a = {re, im};
    norm_sq += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= scale;
  return target_from_statevector(Statevector::from_amplitudes(std::move(amps)));
}

std::vector<TrialSpec> make_trial_specs(int n_qubits, int trials,
                                        std::uint64_t master_seed) {
  if (trials < 1) {
    throw std::invalid_argument("trial count must be >= 1");
  }
  std::vector<TrialSpec> specs;
  specs.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    TrialSpec spec;
    spec.trial_index = t;
    spec.target_seed = derive_seed(master_seed, t, SeedRole::Target);
    spec.gen_seed = derive_seed(master_seed, t, SeedRole::GenInit);
    spec.disc_seed = derive_seed(master_seed, t, SeedRole::DiscInit);
    Rng target_rng(spec.target_seed);
    spec.target = sample_target(n_qubits, target_rng);
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::string trial_key(const SweepConfig& config, const Ratio& ratio,
                      const TrialSpec& spec) {
  std::string canon = "sweep-v1";
  canon += "|n=" + std::to_string(config.n_qubits);
  canon += "|epochs=" + std::to_string(config.epochs);
  canon += "|ratio=" + format_ratio(ratio);
  canon += "|lr=" + format_double(config.adam.lr);
  canon += "|b1=" + format_double(config.adam.beta1);
  canon += "|b2=" + format_double(config.adam.beta2);
  canon += "|eps=" + format_double(config.adam.epsilon);
  canon += "|trial=" + std::to_string(spec.trial_index);
  canon += "|target_seed=" + std::to_string(spec.target_seed);
  canon += "|gen_seed=" + std::to_string(spec.gen_seed);
  canon += "|disc_seed=" + std::to_string(spec.disc_seed);
  return format_u64_hex(fnv1a64(canon));
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.ratios.empty()) {
    throw std::invalid_argument("sweep needs at least one training ratio");
  }

  SweepResult sweep;
  sweep.config = config;
  std::sort(sweep.config.ratios.begin(), sweep.config.ratios.end(), ratio_less);
  sweep.specs = make_trial_specs(config.n_qubits, config.trials,
                                 config.master_seed);

  const std::size_t n_ratios = sweep.config.ratios.size();
  const std::size_t n_trials = sweep.specs.size();
  sweep.results.assign(n_ratios, std::vector<TrialResult>(n_trials));

  fs::path resume_dir;
  if (!config.resume_dir.empty()) {
    resume_dir = config.resume_dir;
    fs::create_directories(resume_dir);
  }

  parallel_for(n_ratios * n_trials, config.jobs, [&](std::size_t item) {
    const std::size_t ri = item / n_trials;
    const std::size_t ti = item % n_trials;
    const Ratio& ratio = sweep.config.ratios[ri];
    const TrialSpec& spec = sweep.specs[ti];
    const TrainingConfig training = training_config_for(sweep.config, ratio);

    fs::path file;
    if (!resume_dir.empty()) {
      file = resume_dir / ("trial_" + trial_key(sweep.config, ratio, spec) + ".json");
      if (auto cached = load_trial(file, training, spec)) {
        sweep.results[ri][ti] = std::move(*cached);
        return;
      }
    }
    TrialResult result = train(training, spec.target, spec.gen_seed, spec.disc_seed);
    if (!file.empty()) store_trial(file, result);
    sweep.results[ri][ti] = std::move(result);
  });

  return sweep;
}

std::pair<AggregateCurves, BestSettings> aggregate_and_best(
    const SweepResult& sweep) {
  if (sweep.results.empty() || sweep.results.front().empty()) {
    throw std::invalid_argument("cannot aggregate an empty sweep");
  }

  const std::size_t n_ratios = sweep.results.size();
  const std::size_t n_trials = sweep.results.front().size();
  const std::size_t n_epochs = sweep.results.front().front().records.size();

  AggregateCurves curves;
  curves.ratios = sweep.config.ratios;
  curves.mean_kl.assign(n_ratios, std::vector<double>(n_epochs, 0.0));
  curves.min_kl.assign(n_ratios, std::vector<double>(n_epochs, 0.0));

  for (std::size_t ri = 0; ri < n_ratios; ++ri) {
    for (std::size_t e = 0; e < n_epochs; ++e) {
      double total = 0.0;
      double lowest = sweep.results[ri][0].records[e].kl;
      for (std::size_t ti = 0; ti < n_trials; ++ti) {
        const double kl = sweep.results[ri][ti].records[e].kl;
        total += kl;
        lowest = std::min(lowest, kl);
      }
      curves.mean_kl[ri][e] = total / static_cast<double>(n_trials);
      curves.min_kl[ri][e] = lowest;
    }
  }

  const auto pick_best = [&](const std::vector<std::vector<double>>& kl) {
    CaseSettings best;
    bool have = false;
    for (std::size_t ri = 0; ri < n_ratios; ++ri) {
      for (std::size_t e = 0; e < n_epochs; ++e) {
        const CaseSettings candidate{curves.ratios[ri], static_cast<int>(e + 1),
                                     kl[ri][e]};
        const bool better =
            !have || candidate.kl < best.kl ||
            (candidate.kl == best.kl &&
             (candidate.epochs < best.epochs ||
              (candidate.epochs == best.epochs &&
               ratio_less(candidate.ratio, best.ratio))));
        if (better) {
          best = candidate;
          have = true;
        }
      }
    }
    return best;
  };

  BestSettings best;
  best.average_case = pick_best(curves.mean_kl);
  best.best_case = pick_best(curves.min_kl);
  return {std::move(curves), best};
}

}  // namespace qgan
