#include "qgan/gradient.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace qgan {

namespace {

void check_wrt(const CircuitFramework& framework, std::span<const int> wrt) {
  // every parameterized slot kind we build is a shiftable rotation or a U
  // gate; reject indices that are out of range or bound to anything else
  std::vector<bool> shiftable(framework.param_count, false);
  for (const ParamSlot& slot : framework.slots) {
    const bool ok = slot.kind == GateKind::RX || slot.kind == GateKind::RY ||
                    slot.kind == GateKind::RZ || slot.kind == GateKind::U;
    for (int i = 0; i < 3; ++i) {
      if (slot.param[i] >= 0 &&
          slot.param[i] < framework.param_count && ok) {
        shiftable[slot.param[i]] = true;
      }
    }
  }
  for (int j : wrt) {
    if (j < 0 || j >= framework.param_count) {
      throw std::out_of_range("gradient index " + std::to_string(j) +
                              " out of range");
    }
    if (!shiftable[j]) {
      throw std::invalid_argument("parameter " + std::to_string(j) +
                                  " is not bound to a shiftable gate");
    }
  }
}

ProbGradient shifted_gradient(const CircuitFramework& framework,
                              std::span<const double> params,
                              const Statevector& initial, int measured_qubit,
                              std::span<const int> wrt, double shift,
                              double denom) {
  check_wrt(framework, wrt);
  ProbGradient result;
  result.value = output_prob(framework, params, initial, measured_qubit);
  result.partials.reserve(wrt.size());
  std::vector<double> shifted(params.begin(), params.end());
  for (int j : wrt) {
    const double original = shifted[j];
    shifted[j] = original + shift;
    const double plus = output_prob(framework, shifted, initial, measured_qubit);
    shifted[j] = original - shift;
    const double minus = output_prob(framework, shifted, initial, measured_qubit);
    shifted[j] = original;
    result.partials.push_back((plus - minus) / denom);
  }
  return result;
}

}  // namespace

double output_prob(const CircuitFramework& framework,
                   std::span<const double> params, const Statevector& initial,
                   int measured_qubit) {
  const Statevector final_state =
      run_circuit(bind_parameters(framework, params), initial);
  return output_qubit_prob(final_state, measured_qubit);
}

ProbGradient prob_and_gradient(const CircuitFramework& framework,
                               std::span<const double> params,
                               const Statevector& initial, int measured_qubit,
                               std::span<const int> wrt) {
  return shifted_gradient(framework, params, initial, measured_qubit, wrt,
                          std::numbers::pi / 2.0, 2.0);
}

ProbGradient finite_difference(const CircuitFramework& framework,
                               std::span<const double> params,
                               const Statevector& initial, int measured_qubit,
                               std::span<const int> wrt, double step) {
  if (!(step > 0.0) || step > 1e-2) {
    throw std::invalid_argument("finite-difference step must be in (0, 1e-2]");
  }
  return shifted_gradient(framework, params, initial, measured_qubit, wrt,
                          step, 2.0 * step);
}

}  // namespace qgan
