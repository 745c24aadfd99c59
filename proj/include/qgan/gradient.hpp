#pragma once

#include <span>
#include <vector>

#include "qgan/framework.hpp"
#include "qgan/statevector.hpp"

namespace qgan {

/// A measured probability together with its partial derivatives with
/// respect to the requested parameter indices (per radian).
struct ProbGradient {
  double value = 0.0;
  std::vector<double> partials;
};

/// P(measured_qubit = 1) of the bound framework run from `initial`.
double output_prob(const CircuitFramework& framework,
                   std::span<const double> params, const Statevector& initial,
                   int measured_qubit);

/// Parameter-shift gradient: partial_j = [p(theta_j + pi/2) - p(theta_j -
/// pi/2)] / 2, exact for rotation generators with G^2 = I. U-gate angles
/// shift the same way since U(theta,phi,lambda) equals RZ(phi) RY(theta)
/// RZ(lambda) up to an unobservable global phase.
ProbGradient prob_and_gradient(const CircuitFramework& framework,
                               std::span<const double> params,
                               const Statevector& initial, int measured_qubit,
                               std::span<const int> wrt);

/// Central-difference oracle, [p(theta+h) - p(theta-h)] / (2h) per index.
/// Step must be in (0, 1e-2].
ProbGradient finite_difference(const CircuitFramework& framework,
                               std::span<const double> params,
                               const Statevector& initial, int measured_qubit,
                               std::span<const int> wrt, double step);

}  // namespace qgan
