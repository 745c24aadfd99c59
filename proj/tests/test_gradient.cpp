#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <numeric>

#include "qgan/framework.hpp"
#include "qgan/gradient.hpp"

using namespace qgan;

namespace {

constexpr double kPi = std::numbers::pi;

CircuitFramework single_rotation(GateKind kind) {
  CircuitFramework fw;
  fw.n_qubits = 1;
  ParamSlot slot;
  slot.kind = kind;
  slot.target = 0;
  slot.param[0] = 0;
  fw.slots.push_back(slot);
  fw.param_count = 1;
  return fw;
}

std::vector<int> all_indices(int count) {
  std::vector<int> indices(count);
  std::iota(indices.begin(), indices.end(), 0);
  return indices;
}

}  // namespace

TEST_CASE("shift rule matches the analytic derivative of a single RY") {
  const CircuitFramework fw = single_rotation(GateKind::RY);
  const Statevector zero = Statevector::zero(1);
  // p(theta) = sin^2(theta/2), p'(theta) = sin(theta)/2
  for (double theta : {0.3, kPi / 2.0, 1.9, 4.0}) {
    const std::vector<double> params = {theta};
    const ProbGradient grad = prob_and_gradient(fw, params, zero, 0, all_indices(1));
    CHECK(grad.value == doctest::Approx(std::sin(theta / 2.0) * std::sin(theta / 2.0))
                            .epsilon(1e-12));
    CHECK(grad.partials[0] == doctest::Approx(std::sin(theta) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("phase-only rotations have zero gradient") {
  const CircuitFramework fw = single_rotation(GateKind::RZ);
  const ProbGradient grad = prob_and_gradient(fw, std::vector<double>{1.234},
                                              Statevector::zero(1), 0,
                                              all_indices(1));
  CHECK(grad.value == doctest::Approx(0.0));
  CHECK(grad.partials[0] == doctest::Approx(0.0));

  const ProbGradient fd = finite_difference(fw, std::vector<double>{1.234},
                                            Statevector::zero(1), 0,
                                            all_indices(1), 1e-5);
  CHECK(fd.partials[0] == doctest::Approx(0.0));
}

TEST_CASE("shift rule matches finite differences on random compositions") {
  Rng rng(17);
  for (int n = 1; n <= 3; ++n) {
    const CircuitFramework composed =
        compose(build_generator(n), build_discriminator(n));
    const Statevector initial = Statevector::zero(n + 1);
    const auto wrt = all_indices(composed.param_count);
    for (int rep = 0; rep < 4; ++rep) {
      const auto params = random_parameters(composed, rng);
      const ProbGradient shift =
          prob_and_gradient(composed, params, initial, n, wrt);
      const ProbGradient fd =
          finite_difference(composed, params, initial, n, wrt, 1e-5);
      CHECK(shift.value == doctest::Approx(fd.value));
      for (std::size_t j = 0; j < wrt.size(); ++j) {
        const double scale = std::max(std::abs(shift.partials[j]), 1.0);
        CHECK(std::abs(shift.partials[j] - fd.partials[j]) / scale < 1e-5);
      }
    }
  }
}

TEST_CASE("U-gate angles are shiftable") {
  const CircuitFramework fw = build_generator(1);  // single U slot
  Rng rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const auto params = random_parameters(fw, rng);
    const ProbGradient shift = prob_and_gradient(fw, params, Statevector::zero(1),
                                                 0, all_indices(3));
    const ProbGradient fd = finite_difference(fw, params, Statevector::zero(1),
                                              0, all_indices(3), 1e-6);
    for (int j = 0; j < 3; ++j) {
      CHECK(shift.partials[j] == doctest::Approx(fd.partials[j]).epsilon(1e-6));
    }
  }
}

TEST_CASE("finite differences converge at second order") {
  const CircuitFramework fw = single_rotation(GateKind::RY);
  const std::vector<double> params = {1.1};
  const Statevector zero = Statevector::zero(1);
  const double exact = prob_and_gradient(fw, params, zero, 0, all_indices(1))
                           .partials[0];
  const double err_h = std::abs(
      finite_difference(fw, params, zero, 0, all_indices(1), 1e-3).partials[0] -
      exact);
  const double err_half = std::abs(
      finite_difference(fw, params, zero, 0, all_indices(1), 5e-4).partials[0] -
      exact);
  // halving h should shrink the error ~4x
  CHECK(err_half < err_h / 3.0);
  CHECK(err_half > err_h / 5.0);
}

TEST_CASE("probability gradients are bounded by 1/2") {
  Rng rng(29);
  const CircuitFramework composed =
      compose(build_generator(2), build_discriminator(2));
  for (int rep = 0; rep < 10; ++rep) {
    const auto params = random_parameters(composed, rng);
    const ProbGradient grad = prob_and_gradient(
        composed, params, Statevector::zero(3), 2, all_indices(composed.param_count));
    for (double partial : grad.partials) {
      CHECK(std::abs(partial) <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("gradient argument validation") {
  const CircuitFramework fw = build_generator(2);
  const std::vector<double> params(12, 0.1);
  const Statevector zero = Statevector::zero(2);
  CHECK_THROWS_AS(
      prob_and_gradient(fw, params, zero, 0, std::vector<int>{12}),
      std::out_of_range);
  CHECK_THROWS_AS(
      prob_and_gradient(fw, params, zero, 0, std::vector<int>{-1}),
      std::out_of_range);
  CHECK_THROWS_AS(finite_difference(fw, params, zero, 0, std::vector<int>{0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(finite_difference(fw, params, zero, 0, std::vector<int>{0}, 0.5),
                  std::invalid_argument);
}
