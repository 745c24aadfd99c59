#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace qgan {

// Dense statevector simulation caps out here; the experiments need at most
// 5 qubits (4 data + 1 output), the cap just leaves headroom.
inline constexpr int kMaxQubits = 12;

/// Pure state of an n-qubit register as 2^n complex amplitudes.
/// Qubit 0 is the least significant bit of the basis index, everywhere.
struct Statevector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amps;

  /// |0...0> on n qubits.
  static Statevector zero(int n);

  /// Wraps an amplitude vector (length must be a power of two, norm 1
  /// within 1e-6); the stored amplitudes are rescaled to exact unit norm.
  static Statevector from_amplitudes(std::vector<std::complex<double>> amps);

  std::size_t dim() const { return amps.size(); }
  double norm_sq() const;
};

enum class GateKind { RX, RY, RZ, U, H, X, CNOT };

/// One gate instance. Rotations follow the exp(-i*theta*G/2) convention;
/// U(theta, phi, lambda) is the standard universal single-qubit gate, with
/// U(pi/2, 0, pi) = H exactly.
struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  int control = -1;               // CNOT only
  std::array<double, 3> angles{}; // RX/RY/RZ use [0]; U uses all three

  static Gate rx(int target, double theta);
  static Gate ry(int target, double theta);
  static Gate rz(int target, double theta);
  static Gate u(int target, double theta, double phi, double lambda);
  static Gate h(int target);
  static Gate x(int target);
  static Gate cnot(int control, int target);
};

/// Number of angle parameters a gate kind carries (0 for H/X/CNOT).
int gate_angle_count(GateKind kind);

struct Mat2 {
  std::complex<double> m00, m01, m10, m11;
};

/// 2x2 unitary of a single-qubit gate; throws for CNOT.
Mat2 gate_matrix(const Gate& gate);

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

Statevector apply_gate(const Statevector& state, const Gate& gate);
void apply_gate_inplace(Statevector& state, const Gate& gate);

/// Applies the gates in list order. Equivalent to multiplying the full
/// 2^n x 2^n unitary product into the initial vector.
Statevector run_circuit(const Circuit& circuit, const Statevector& initial);

/// Born-rule probabilities |amp_i|^2 over all basis outcomes.
std::vector<double> basis_probabilities(const Statevector& state);

/// P(measuring `qubit` = 1), marginalized over the other qubits.
double output_qubit_prob(const Statevector& state, int qubit);

}  // namespace qgan
