#include "qgan/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qgan/gradient.hpp"
#include "qgan/rng.hpp"

namespace qgan {

namespace {

constexpr double kProbClamp = 1e-12;

double clamp_prob(double p) {
  return std::clamp(p, kProbClamp, 1.0 - kProbClamp);
}

}  // namespace

TargetState bell_target() {
  const double r = std::numbers::sqrt2 / 2.0;
  std::vector<std::complex<double>> amps(4, {0.0, 0.0});
  amps[0] = {r, 0.0};
  amps[3] = {r, 0.0};
  return target_from_statevector(Statevector::from_amplitudes(std::move(amps)));
}

TargetState target_from_statevector(Statevector state) {
  TargetState target;
  target.n_qubits = state.n_qubits;
  target.state = std::move(state);
  return target;
}

void validate_config(const TrainingConfig& config) {
  if (config.n_qubits < 1 || config.n_qubits > 8) {
    throw std::invalid_argument("training requires 1 to 8 data qubits");
  }
  if (config.epochs < 1) {
    throw std::invalid_argument("epoch count must be >= 1");
  }
  if (config.ratio.disc_updates < 1 || config.ratio.gen_updates < 1) {
    throw std::invalid_argument("training ratio sides must both be >= 1");
  }
  if (!(config.adam.lr > 0.0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
}

LossPair gan_losses(double p_real, double p_fake) {
  const double pr = clamp_prob(p_real);
  const double pf = clamp_prob(p_fake);
  LossPair losses;
  losses.disc_loss = -(std::log(pr) + std::log(1.0 - pf));
  losses.gen_loss = -std::log(pf);
  return losses;
}

std::shared_ptr<const GanCircuits> make_gan_circuits(int n_qubits,
                                                     const TargetState& target) {
  if (target.n_qubits != n_qubits ||
      target.state.n_qubits != n_qubits) {
    throw std::invalid_argument("target state has " +
                                std::to_string(target.n_qubits) +
                                " qubits, config expects " +
                                std::to_string(n_qubits));
  }

  auto circuits = std::make_shared<GanCircuits>();
  circuits->gen = build_generator(n_qubits);
  circuits->disc = build_discriminator(n_qubits);
  circuits->composed = compose(circuits->gen, circuits->disc);
  circuits->output_qubit = n_qubits;

  circuits->fake_initial = Statevector::zero(n_qubits + 1);

  // oracle branch: data register holds the target, output qubit |0>;
  // with the output qubit as most significant bit the target amplitudes
  // land on the low half of the index range unchanged
  Statevector real_initial = Statevector::zero(n_qubits + 1);
  std::fill(real_initial.amps.begin(), real_initial.amps.end(),
            std::complex<double>{0.0, 0.0});
  for (std::size_t i = 0; i < target.state.dim(); ++i) {
    real_initial.amps[i] = target.state.amps[i];
  }
  circuits->real_initial = std::move(real_initial);

  circuits->target_dist = basis_probabilities(target.state);

  circuits->gen_indices.resize(circuits->gen.param_count);
  std::iota(circuits->gen_indices.begin(), circuits->gen_indices.end(), 0);
  circuits->disc_indices_composed.resize(circuits->disc.param_count);
  std::iota(circuits->disc_indices_composed.begin(),
            circuits->disc_indices_composed.end(), circuits->gen.param_count);
  circuits->disc_indices.resize(circuits->disc.param_count);
  std::iota(circuits->disc_indices.begin(), circuits->disc_indices.end(), 0);
  return circuits;
}

QganState init_qgan(const TrainingConfig& config, const TargetState& target,
                    std::uint64_t gen_seed, std::uint64_t disc_seed) {
  validate_config(config);
  QganState state;
  state.circuits = make_gan_circuits(config.n_qubits, target);
  Rng gen_rng(gen_seed);
  Rng disc_rng(disc_seed);
  state.gen_params = random_parameters(state.circuits->gen, gen_rng);
  state.disc_params = random_parameters(state.circuits->disc, disc_rng);
  state.gen_opt = adam_new(state.gen_params.size(), config.adam);
  state.disc_opt = adam_new(state.disc_params.size(), config.adam);
  return state;
}

namespace {

std::vector<double> composed_params(const QganState& state) {
  std::vector<double> params;
  params.reserve(state.gen_params.size() + state.disc_params.size());
  params.insert(params.end(), state.gen_params.begin(), state.gen_params.end());
  params.insert(params.end(), state.disc_params.begin(), state.disc_params.end());
  return params;
}

}  // namespace

std::pair<double, double> d_values(const QganState& state) {
  const GanCircuits& c = *state.circuits;
  const double p_real = output_prob(c.disc, state.disc_params, c.real_initial,
                                    c.output_qubit);
  const double p_fake = output_prob(c.composed, composed_params(state),
                                    c.fake_initial, c.output_qubit);
  return {p_real, p_fake};
}

StepOutcome generator_update(const QganState& state) {
  const GanCircuits& c = *state.circuits;
  const ProbGradient fake = prob_and_gradient(
      c.composed, composed_params(state), c.fake_initial, c.output_qubit,
      c.gen_indices);

  // gen_loss = -ln p_fake, so dL/dtheta = -(1/p_fake) dp/dtheta
  const double pf = clamp_prob(fake.value);
  std::vector<double> grad(fake.partials.size());
  for (std::size_t i = 0; i < grad.size(); ++i) {
    grad[i] = -fake.partials[i] / pf;
  }

  StepOutcome outcome{state, -std::log(pf)};
  auto [opt, params] = adam_step(state.gen_opt, state.gen_params, grad);
  outcome.state.gen_opt = std::move(opt);
  outcome.state.gen_params = std::move(params);
  return outcome;
}

StepOutcome discriminator_update(const QganState& state) {
  const GanCircuits& c = *state.circuits;
  // both circuits are simulated with the same pre-update parameters and the
  // branch gradients applied in a single step
  const ProbGradient real = prob_and_gradient(
      c.disc, state.disc_params, c.real_initial, c.output_qubit, c.disc_indices);
  const ProbGradient fake = prob_and_gradient(
      c.composed, composed_params(state), c.fake_initial, c.output_qubit,
      c.disc_indices_composed);

  // disc_loss = -[ln p_real + ln(1 - p_fake)]
  const double pr = clamp_prob(real.value);
  const double pf = clamp_prob(fake.value);
  std::vector<double> grad(real.partials.size());
  for (std::size_t i = 0; i < grad.size(); ++i) {
    grad[i] = -real.partials[i] / pr + fake.partials[i] / (1.0 - pf);
  }

  StepOutcome outcome{state, -(std::log(pr) + std::log(1.0 - pf))};
  auto [opt, params] = adam_step(state.disc_opt, state.disc_params, grad);
  outcome.state.disc_opt = std::move(opt);
  outcome.state.disc_params = std::move(params);
  return outcome;
}

std::pair<QganState, EpochRecord> run_epoch(const QganState& state,
                                            const Ratio& ratio) {
  if (ratio.disc_updates < 1 || ratio.gen_updates < 1) {
    throw std::invalid_argument("training ratio sides must both be >= 1");
  }
  QganState current = state;
  EpochRecord record;
  for (std::int64_t i = 0; i < ratio.disc_updates; ++i) {
    StepOutcome outcome = discriminator_update(current);
    current = std::move(outcome.state);
    record.disc_loss = outcome.loss;
  }
  for (std::int64_t i = 0; i < ratio.gen_updates; ++i) {
    StepOutcome outcome = generator_update(current);
    current = std::move(outcome.state);
    record.gen_loss = outcome.loss;
  }
  current.epoch = state.epoch + 1;
  record.epoch = current.epoch;
  record.kl = kl_divergence(
      current.circuits->target_dist,
      generator_distribution(current.circuits->gen, current.gen_params));
  return {std::move(current), record};
}

TrialResult train(const TrainingConfig& config, const TargetState& target,
                  std::uint64_t gen_seed, std::uint64_t disc_seed) {
  validate_config(config);
  QganState state = init_qgan(config, target, gen_seed, disc_seed);

  TrialResult result;
  result.config = config;
  result.gen_seed = gen_seed;
  result.disc_seed = disc_seed;
  result.initial_kl = kl_divergence(
      state.circuits->target_dist,
      generator_distribution(state.circuits->gen, state.gen_params));
  result.records.reserve(config.epochs);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    auto [next, record] = run_epoch(state, config.ratio);
    state = std::move(next);
    result.records.push_back(record);
  }
  result.final_gen_params = std::move(state.gen_params);
  result.final_disc_params = std::move(state.disc_params);
  return result;
}

TrialResult train(const TrainingConfig& config, const TargetState& target) {
  return train(config, target,
               derive_seed(config.seed, 0, SeedRole::GenInit),
               derive_seed(config.seed, 0, SeedRole::DiscInit));
}

Distribution generator_distribution(const CircuitFramework& gen,
                                    std::span<const double> gen_params) {
  const Statevector out =
      run_circuit(bind_parameters(gen, gen_params), Statevector::zero(gen.n_qubits));
  return basis_probabilities(out);
}

}  // namespace qgan
