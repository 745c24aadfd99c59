#pragma once

#include <complex>
#include <vector>

#include "qgan/rng.hpp"
#include "qgan/statevector.hpp"

// Test-only oracles, kept independent of the library's gate kernel: gates
// are expanded to full 2^n x 2^n matrices and multiplied densely.

namespace qgan::testing {

using cd = std::complex<double>;
using DenseMatrix = std::vector<std::vector<cd>>;

inline DenseMatrix identity_matrix(std::size_t dim) {
  DenseMatrix m(dim, std::vector<cd>(dim, cd{0.0, 0.0}));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = cd{1.0, 0.0};
  return m;
}

// full-register unitary of one gate, built entry by entry from the 2x2
// blocks (or the CNOT permutation) without touching the simulator kernel
inline DenseMatrix gate_unitary_dense(const Gate& gate, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseMatrix m(dim, std::vector<cd>(dim, cd{0.0, 0.0}));
  if (gate.kind == GateKind::CNOT) {
    const std::size_t cbit = std::size_t{1} << gate.control;
    const std::size_t tbit = std::size_t{1} << gate.target;
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t row = (col & cbit) ? (col ^ tbit) : col;
      m[row][col] = cd{1.0, 0.0};
    }
    return m;
  }
  const Mat2 g = gate_matrix(gate);
  const cd entries[2][2] = {{g.m00, g.m01}, {g.m10, g.m11}};
  const std::size_t tbit = std::size_t{1} << gate.target;
  for (std::size_t col = 0; col < dim; ++col) {
    const int col_bit = (col & tbit) ? 1 : 0;
    for (int row_bit = 0; row_bit < 2; ++row_bit) {
      const std::size_t row = (col & ~tbit) | (row_bit ? tbit : 0);
      m[row][col] = entries[row_bit][col_bit];
    }
  }
  return m;
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t dim = a.size();
  DenseMatrix out(dim, std::vector<cd>(dim, cd{0.0, 0.0}));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const cd aik = a[i][k];
      if (aik == cd{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        out[i][j] += aik * b[k][j];
      }
    }
  }
  return out;
}

inline std::vector<cd> matvec(const DenseMatrix& m, const std::vector<cd>& v) {
  std::vector<cd> out(v.size(), cd{0.0, 0.0});
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

// dense unitary-product execution: U_k ... U_2 U_1 |initial>
inline std::vector<cd> run_circuit_dense(const Circuit& circuit,
                                         const Statevector& initial) {
  DenseMatrix product = identity_matrix(initial.dim());
  for (const Gate& gate : circuit.gates) {
    product = matmul(gate_unitary_dense(gate, circuit.n_qubits), product);
  }
  return matvec(product, initial.amps);
}

inline double max_unitarity_defect(const DenseMatrix& m) {
  const std::size_t dim = m.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      cd dot{0.0, 0.0};
      for (std::size_t k = 0; k < dim; ++k) {
        dot += std::conj(m[k][i]) * m[k][j];
      }
      const cd expected = i == j ? cd{1.0, 0.0} : cd{0.0, 0.0};
      worst = std::max(worst, std::abs(dot - expected));
    }
  }
  return worst;
}

inline Gate random_gate(Rng& rng, int n_qubits) {
  const int kind = static_cast<int>(rng.uniform(0.0, 7.0));
  const int target = static_cast<int>(rng.uniform(0.0, static_cast<double>(n_qubits)));
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  switch (kind) {
    case 0: return Gate::rx(target, theta);
    case 1: return Gate::ry(target, theta);
    case 2: return Gate::rz(target, theta);
    case 3:
      return Gate::u(target, theta, rng.uniform(0.0, 2.0 * std::numbers::pi),
                     rng.uniform(0.0, 2.0 * std::numbers::pi));
    case 4: return Gate::h(target);
    case 5: return Gate::x(target);
    default: {
      if (n_qubits < 2) return Gate::ry(target, theta);
      int control = static_cast<int>(rng.uniform(0.0, static_cast<double>(n_qubits)));
      if (control == target) control = (control + 1) % n_qubits;
      return Gate::cnot(control, target);
    }
  }
}

inline Circuit random_circuit(Rng& rng, int n_qubits, int n_gates) {
  Circuit circuit;
  circuit.n_qubits = n_qubits;
  circuit.gates.reserve(n_gates);
  for (int i = 0; i < n_gates; ++i) {
    circuit.gates.push_back(random_gate(rng, n_qubits));
  }
  return circuit;
}

}  // namespace qgan::testing
