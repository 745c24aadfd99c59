#pragma once

#include <vector>

namespace qgan {

/// Probabilities over the 2^n computational basis outcomes, in index order.
using Distribution = std::vector<double>;

/// Floor applied to q entries before the log; caps reportable divergence at
/// about 27.6 nats per unit of p-mass sitting on q's zero support.
inline constexpr double kKlFloor = 1e-12;

/// True when entries are non-negative and sum to 1 within `tolerance`.
bool is_distribution(const Distribution& dist, double tolerance = 1e-9);

/// KL(p || q) = sum_i p_i * ln(p_i / max(q_i, floor)) in nats; p_i = 0 terms
/// contribute nothing. Order matters: p is the target, q the candidate.
double kl_divergence(const Distribution& p, const Distribution& q);

}  // namespace qgan
