#include "qgan/framework.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgan {

namespace {

constexpr int kMaxDataQubits = 8;

void check_data_qubits(int n) {
  if (n < 1 || n > kMaxDataQubits) {
    throw std::invalid_argument("data qubit count must be in [1, " +
                                std::to_string(kMaxDataQubits) + "], got " +
                                std::to_string(n));
  }
}

ParamSlot rotation_slot(GateKind kind, int target, int param_index) {
  ParamSlot slot;
  slot.kind = kind;
  slot.target = target;
  slot.param[0] = param_index;
  return slot;
}

ParamSlot cnot_slot(int control, int target) {
  ParamSlot slot;
  slot.kind = GateKind::CNOT;
  slot.target = target;
  slot.control = control;
  return slot;
}

// layers of per-qubit RY+RZ slots, each layer closed by a CNOT chain
CircuitFramework layered_ansatz(int n_qubits, int layers) {
  CircuitFramework fw;
  fw.n_qubits = n_qubits;
  int next_param = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (int q = 0; q < n_qubits; ++q) {
      fw.slots.push_back(rotation_slot(GateKind::RY, q, next_param++));
      fw.slots.push_back(rotation_slot(GateKind::RZ, q, next_param++));
    }
    for (int q = 0; q + 1 < n_qubits; ++q) {
      fw.slots.push_back(cnot_slot(q, q + 1));
    }
  }
  fw.param_count = next_param;
  return fw;
}

}  // namespace

void validate_framework(const CircuitFramework& framework) {
  if (framework.n_qubits < 1 || framework.n_qubits > kMaxQubits) {
    throw std::invalid_argument("framework qubit count out of range");
  }
  std::vector<int> uses(framework.param_count, 0);
  for (const ParamSlot& slot : framework.slots) {
    if (slot.target < 0 || slot.target >= framework.n_qubits) {
      throw std::invalid_argument("slot target qubit out of range");
    }
    if (slot.kind == GateKind::CNOT &&
        (slot.control < 0 || slot.control >= framework.n_qubits ||
         slot.control == slot.target)) {
      throw std::invalid_argument("CNOT slot control qubit invalid");
    }
    const int n_angles = gate_angle_count(slot.kind);
    for (int i = 0; i < 3; ++i) {
      if (slot.param[i] < 0) continue;
      if (i >= n_angles) {
        throw std::invalid_argument("parameter bound to a non-angle position");
      }
      if (slot.param[i] >= framework.param_count) {
        throw std::invalid_argument("parameter index out of range");
      }
      ++uses[slot.param[i]];
    }
  }
  for (int i = 0; i < framework.param_count; ++i) {
    if (uses[i] != 1) {
      throw std::invalid_argument("parameter " + std::to_string(i) +
                                  " used " + std::to_string(uses[i]) +
                                  " times; frameworks require exactly one use");
    }
  }
}

CircuitFramework build_generator(int n) {
  check_data_qubits(n);
  if (n == 1) {
    CircuitFramework fw;
    fw.n_qubits = 1;
    ParamSlot slot;
    slot.kind = GateKind::U;
    slot.target = 0;
    slot.param = {0, 1, 2};
    fw.slots.push_back(slot);
    fw.param_count = 3;
    return fw;
  }
  return layered_ansatz(n, n + 1);
}

CircuitFramework build_discriminator(int n) {
  check_data_qubits(n);
  return layered_ansatz(n + 1, n);
}

Circuit bind_parameters(const CircuitFramework& framework,
                        std::span<const double> params) {
  if (params.size() != static_cast<std::size_t>(framework.param_count)) {
    throw std::invalid_argument(
        "parameter vector length " + std::to_string(params.size()) +
        " does not match framework param_count " +
        std::to_string(framework.param_count));
  }
  for (double value : params) {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("parameter vector contains a non-finite angle");
    }
  }
  Circuit circuit;
  circuit.n_qubits = framework.n_qubits;
  circuit.gates.reserve(framework.slots.size());
  for (const ParamSlot& slot : framework.slots) {
    Gate gate;
    gate.kind = slot.kind;
    gate.target = slot.target;
    gate.control = slot.control;
    for (int i = 0; i < 3; ++i) {
      gate.angles[i] = slot.param[i] >= 0 ? params[slot.param[i]] : slot.fixed[i];
    }
    circuit.gates.push_back(gate);
  }
  return circuit;
}

std::vector<double> random_parameters(const CircuitFramework& framework,
                                      Rng& rng) {
  std::vector<double> params(framework.param_count);
  for (double& value : params) {
    value = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return params;
}

CircuitFramework compose(const CircuitFramework& first,
                         const CircuitFramework& second) {
  CircuitFramework fw;
  fw.n_qubits = std::max(first.n_qubits, second.n_qubits);
  fw.param_count = first.param_count + second.param_count;
  fw.slots = first.slots;
  for (ParamSlot slot : second.slots) {
    for (int i = 0; i < 3; ++i) {
      if (slot.param[i] >= 0) slot.param[i] += first.param_count;
    }
    fw.slots.push_back(slot);
  }
  return fw;
}

}  // namespace qgan
