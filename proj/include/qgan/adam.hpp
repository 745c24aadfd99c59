#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qgan {

struct AdamConfig {
  double lr = 0.02;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  AdamConfig config;
  std::int64_t step_count = 0;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
};

/// Fresh optimizer state with zeroed moments.
AdamState adam_new(std::size_t dim, const AdamConfig& config = {});

/// One bias-corrected Adam step. Pure: returns the updated state and
/// parameters, leaving the inputs untouched.
std::pair<AdamState, std::vector<double>> adam_step(
    const AdamState& state, std::span<const double> params,
    std::span<const double> grad);

}  // namespace qgan
