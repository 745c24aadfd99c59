#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "qgan/adam.hpp"
#include "qgan/framework.hpp"
#include "qgan/metrics.hpp"
#include "qgan/ratio.hpp"
#include "qgan/statevector.hpp"

namespace qgan {

/// The state the oracle holds. In simulation the oracle is realized by
/// initializing the data register to this state directly.
struct TargetState {
  int n_qubits = 0;
  Statevector state;
};

/// (|00> + |11>) / sqrt(2).
TargetState bell_target();

TargetState target_from_statevector(Statevector state);

struct TrainingConfig {
  int n_qubits = 2;
  int epochs = 100;
  Ratio ratio{};
  AdamConfig adam{};  // defaults: Adam at lr 0.02
  std::uint64_t seed = 0;
};

void validate_config(const TrainingConfig& config);

struct EpochRecord {
  int epoch = 0;
  double gen_loss = 0.0;
  double disc_loss = 0.0;
  double kl = 0.0;  // nats, target vs generator output distribution
};

struct LossPair {
  double gen_loss = 0.0;
  double disc_loss = 0.0;
};

/// Cross-entropy GAN losses from the two discriminator outputs, with the
/// non-saturating generator form. Output qubit |1> means "real".
/// Inputs are clamped to [1e-12, 1 - 1e-12] before the logs.
///   disc_loss = -[ln p_real + ln(1 - p_fake)]
///   gen_loss  = -ln p_fake
LossPair gan_losses(double p_real, double p_fake);

/// Immutable per-run circuit bundle shared by every update of a training
/// run: frameworks, composed layout, initial states and index sets.
struct GanCircuits {
  CircuitFramework gen;       // data qubits only
  CircuitFramework disc;      // data qubits + output qubit
  CircuitFramework composed;  // generator then discriminator, params concatenated
  Statevector fake_initial;   // |0...0> on n+1 qubits
  Statevector real_initial;   // target (x) |0> on the output qubit
  Distribution target_dist;
  std::vector<int> gen_indices;            // in composed
  std::vector<int> disc_indices_composed;  // in composed
  std::vector<int> disc_indices;           // in disc alone
  int output_qubit = 0;
};

std::shared_ptr<const GanCircuits> make_gan_circuits(int n_qubits,
                                                     const TargetState& target);

/// The mutable subject of training. Value-semantic; updates return new
/// states rather than mutating.
struct QganState {
  std::shared_ptr<const GanCircuits> circuits;
  std::vector<double> gen_params;
  std::vector<double> disc_params;
  AdamState gen_opt;
  AdamState disc_opt;
  int epoch = 0;
};

/// Randomly initialized adversaries (angles uniform on [0, 2*pi), generator
/// stream and discriminator stream seeded independently).
QganState init_qgan(const TrainingConfig& config, const TargetState& target,
                    std::uint64_t gen_seed, std::uint64_t disc_seed);

/// (p_real, p_fake): the output-qubit probabilities of the oracle+
/// discriminator circuit and the generator+discriminator circuit.
std::pair<double, double> d_values(const QganState& state);

struct StepOutcome {
  QganState state;
  double loss = 0.0;  // evaluated at the pre-step parameters
};

/// One atomic generator step: gradient of gen_loss through p_fake with the
/// discriminator frozen, then one Adam step. disc_params are untouched.
StepOutcome generator_update(const QganState& state);

/// One atomic discriminator step: both circuits are evaluated with the
/// current parameters, the two branch gradients of disc_loss are summed and
/// applied all at once. gen_params are untouched.
StepOutcome discriminator_update(const QganState& state);

/// d discriminator updates first, then g generator updates. The record
/// carries each side's loss from its final update of the epoch and the
/// post-epoch KL divergence.
std::pair<QganState, EpochRecord> run_epoch(const QganState& state,
                                            const Ratio& ratio);

struct TrialResult {
  TrainingConfig config;
  std::uint64_t gen_seed = 0;
  std::uint64_t disc_seed = 0;
  double initial_kl = 0.0;  // before any update
  std::vector<EpochRecord> records;
  std::vector<double> final_gen_params;
  std::vector<double> final_disc_params;
};

/// Full training run; deterministic function of (config, target, seeds).
TrialResult train(const TrainingConfig& config, const TargetState& target,
                  std::uint64_t gen_seed, std::uint64_t disc_seed);

/// Seeds derived from config.seed via the documented mixing function.
TrialResult train(const TrainingConfig& config, const TargetState& target);

/// Distribution the bound generator produces from |0...0>.
Distribution generator_distribution(const CircuitFramework& gen,
                                    std::span<const double> gen_params);

}  // namespace qgan
