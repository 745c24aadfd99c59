#include "qgan/adam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgan {

AdamState adam_new(std::size_t dim, const AdamConfig& config) {
  if (dim < 1) {
    throw std::invalid_argument("optimizer dimension must be >= 1");
  }
  if (!(config.lr > 0.0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (config.beta1 < 0.0 || config.beta1 >= 1.0 || config.beta2 < 0.0 ||
      config.beta2 >= 1.0 || !(config.epsilon > 0.0)) {
    throw std::invalid_argument("Adam hyperparameters out of range");
  }
  AdamState state;
  state.config = config;
  state.first_moment.assign(dim, 0.0);
  state.second_moment.assign(dim, 0.0);
  return state;
}

std::pair<AdamState, std::vector<double>> adam_step(
    const AdamState& state, std::span<const double> params,
    std::span<const double> grad) {
  const std::size_t dim = state.first_moment.size();
  if (params.size() != dim || grad.size() != dim) {
    throw std::invalid_argument("Adam step dimension mismatch: state " +
                                std::to_string(dim) + ", params " +
                                std::to_string(params.size()) + ", grad " +
                                std::to_string(grad.size()));
  }
  for (double g : grad) {
    if (!std::isfinite(g)) {
      throw std::invalid_argument("gradient entry is not finite");
    }
  }

  AdamState next = state;
  next.step_count = state.step_count + 1;
  const AdamConfig& c = state.config;
  const double bias1 = 1.0 - std::pow(c.beta1, static_cast<double>(next.step_count));
  const double bias2 = 1.0 - std::pow(c.beta2, static_cast<double>(next.step_count));

  std::vector<double> updated(params.begin(), params.end());
  for (std::size_t i = 0; i < dim; ++i) {
    next.first_moment[i] = c.beta1 * state.first_moment[i] + (1.0 - c.beta1) * grad[i];
    next.second_moment[i] =
        c.beta2 * state.second_moment[i] + (1.0 - c.beta2) * grad[i] * grad[i];
    const double m_hat = next.first_moment[i] / bias1;
    const double v_hat = next.second_moment[i] / bias2;
    updated[i] -= c.lr * m_hat / (std::sqrt(v_hat) + c.epsilon);
  }
  return {std::move(next), std::move(updated)};
}

}  // namespace qgan
