#pragma once

#include <array>
#include <span>
#include <vector>

#include "qgan/rng.hpp"
#include "qgan/statevector.hpp"

namespace qgan {

/// One gate position in a framework. Parameterized angles reference slots
/// of the parameter vector by index; -1 means the angle is fixed.
struct ParamSlot {
  GateKind kind = GateKind::X;
  int target = 0;
  int control = -1;
  std::array<int, 3> param{-1, -1, -1};
  std::array<double, 3> fixed{0.0, 0.0, 0.0};
};

/// A gate layout with unbound rotation angles. Binding a parameter vector
/// yields a runnable Circuit; the layout itself never changes.
struct CircuitFramework {
  int n_qubits = 0;
  std::vector<ParamSlot> slots;
  int param_count = 0;
};

/// Throws unless every parameter index in [0, param_count) appears exactly
/// once and all slot qubits are in range.
void validate_framework(const CircuitFramework& framework);

/// Generator ansatz on n data qubits. n = 1 is a single U gate (3 parameters,
/// the full 1-qubit algorithm space). n >= 2 is n+1 layers of RY+RZ on every
/// qubit followed by a CNOT chain, 2*n*(n+1) parameters (12 for n = 2).
CircuitFramework build_generator(int n);

/// Discriminator ansatz on n data qubits plus one output qubit (index n,
/// the measured one). n layers of RY+RZ on all n+1 qubits, each closed by a
/// CNOT chain ending on the output qubit; 2*n*(n+1) parameters.
CircuitFramework build_discriminator(int n);

Circuit bind_parameters(const CircuitFramework& framework,
                        std::span<const double> params);

/// Independent uniform angles on [0, 2*pi), one per parameter slot.
std::vector<double> random_parameters(const CircuitFramework& framework,
                                      Rng& rng);

/// Frameworks run back to back on one register (qubit indices untouched),
/// parameter vectors concatenated: first's params keep their indices,
/// second's are offset by first.param_count.
CircuitFramework compose(const CircuitFramework& first,
                         const CircuitFramework& second);

}  // namespace qgan
