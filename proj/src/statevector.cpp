#include "qgan/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgan {

namespace {

using cd = std::complex<double>;

// plain-float complex multiply; std::complex operator* routes through
// __muldc3 on gcc, which dominates the gate kernel otherwise
inline cd cmul(cd a, cd b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void check_qubit(int qubit, int n_qubits, const char* what) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range(std::string(what) + " qubit " +
                            std::to_string(qubit) + " out of range for " +
                            std::to_string(n_qubits) + "-qubit state");
  }
}

void check_angles(const Gate& gate) {
  for (int i = 0; i < gate_angle_count(gate.kind); ++i) {
    if (!std::isfinite(gate.angles[i])) {
      throw std::invalid_argument("gate angle is not finite");
    }
  }
}

}  // namespace

Statevector Statevector::zero(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
  }
  Statevector state;
  state.n_qubits = n;
  state.amps.assign(std::size_t{1} << n, cd{0.0, 0.0});
  state.amps[0] = cd{1.0, 0.0};
  return state;
}

Statevector Statevector::from_amplitudes(std::vector<cd> amps) {
  int n = 0;
  while ((std::size_t{1} << n) < amps.size() && n <= kMaxQubits) ++n;
  if (n < 1 || n > kMaxQubits || (std::size_t{1} << n) != amps.size()) {
    throw std::invalid_argument("amplitude count must be 2^n with 1 <= n <= " +
                                std::to_string(kMaxQubits));
  }
  double norm_sq = 0.0;
  for (const cd& a : amps) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > 1e-6) {
    throw std::invalid_argument("amplitudes are not normalized (|norm^2 - 1| = " +
                                std::to_string(std::abs(norm_sq - 1.0)) + ")");
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (cd& a : amps) a *= scale;
  Statevector state;
  state.n_qubits = n;
  state.amps = std::move(amps);
  return state;
}

double Statevector::norm_sq() const {
  double total = 0.0;
  for (const cd& a : amps) total += std::norm(a);
  return total;
}

Gate Gate::rx(int target, double theta) {
  return Gate{GateKind::RX, target, -1, {theta, 0.0, 0.0}};
}
Gate Gate::ry(int target, double theta) {
  return Gate{GateKind::RY, target, -1, {theta, 0.0, 0.0}};
}
Gate Gate::rz(int target, double theta) {
  return Gate{GateKind::RZ, target, -1, {theta, 0.0, 0.0}};
}
Gate Gate::u(int target, double theta, double phi, double lambda) {
  return Gate{GateKind::U, target, -1, {theta, phi, lambda}};
}
Gate Gate::h(int target) { return Gate{GateKind::H, target, -1, {}}; }
Gate Gate::x(int target) { return Gate{GateKind::X, target, -1, {}}; }
Gate Gate::cnot(int control, int target) {
  return Gate{GateKind::CNOT, target, control, {}};
}

int gate_angle_count(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return 1;
    case GateKind::U:
      return 3;
    default:
      return 0;
  }
}

Mat2 gate_matrix(const Gate& gate) {
  const double half = gate.angles[0] / 2.0;
  switch (gate.kind) {
    case GateKind::RX: {
      const double c = std::cos(half), s = std::sin(half);
      return {{c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0}};
    }
    case GateKind::RY: {
      const double c = std::cos(half), s = std::sin(half);
      return {{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
    }
    case GateKind::RZ: {
      const double c = std::cos(half), s = std::sin(half);
      return {{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}};
    }
    case GateKind::U: {
      // U(theta, phi, lambda) = [[cos(t/2), -e^{i l} sin(t/2)],
      //                          [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]]
      const double c = std::cos(half), s = std::sin(half);
      const double phi = gate.angles[1], lambda = gate.angles[2];
      return {{c, 0.0},
              {-s * std::cos(lambda), -s * std::sin(lambda)},
              {s * std::cos(phi), s * std::sin(phi)},
              {c * std::cos(phi + lambda), c * std::sin(phi + lambda)}};
    }
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {{r, 0.0}, {r, 0.0}, {r, 0.0}, {-r, 0.0}};
    }
    case GateKind::X:
      return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
    case GateKind::CNOT:
      break;
  }
  throw std::invalid_argument("CNOT has no single-qubit matrix");
}

void apply_gate_inplace(Statevector& state, const Gate& gate) {
  check_qubit(gate.target, state.n_qubits, "target");
  check_angles(gate);

  auto& a = state.amps;
  const std::size_t dim = a.size();

  if (gate.kind == GateKind::CNOT) {
    check_qubit(gate.control, state.n_qubits, "control");
    if (gate.control == gate.target) {
      throw std::invalid_argument("CNOT control equals target");
    }
    const std::size_t cbit = std::size_t{1} << gate.control;
    const std::size_t tbit = std::size_t{1} << gate.target;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & cbit) != 0 && (i & tbit) == 0) {
        std::swap(a[i], a[i | tbit]);
      }
    }
    return;
  }

  const Mat2 m = gate_matrix(gate);
  const std::size_t step = std::size_t{1} << gate.target;
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t i = base; i < base + step; ++i) {
      const cd x0 = a[i];
      const cd x1 = a[i + step];
      a[i] = cmul(m.m00, x0) + cmul(m.m01, x1);
      a[i + step] = cmul(m.m10, x0) + cmul(m.m11, x1);
    }
  }
}

Statevector apply_gate(const Statevector& state, const Gate& gate) {
  Statevector out = state;
  apply_gate_inplace(out, gate);
  return out;
}

Statevector run_circuit(const Circuit& circuit, const Statevector& initial) {
  if (circuit.n_qubits != initial.n_qubits) {
    throw std::invalid_argument("circuit acts on " +
                                std::to_string(circuit.n_qubits) +
                                " qubits but state has " +
                                std::to_string(initial.n_qubits));
  }
  Statevector state = initial;
  for (const Gate& gate : circuit.gates) {
    apply_gate_inplace(state, gate);
  }
  return state;
}

std::vector<double> basis_probabilities(const Statevector& state) {
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = std::norm(state.amps[i]);
  }
  return probs;
}

double output_qubit_prob(const Statevector& state, int qubit) {
  check_qubit(qubit, state.n_qubits, "measured");
  const std::size_t bit = std::size_t{1} << qubit;
  double p1 = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if ((i & bit) != 0) p1 += std::norm(state.amps[i]);
  }
  return p1;
}

}  // namespace qgan
