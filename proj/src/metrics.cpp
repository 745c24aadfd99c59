#include "qgan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qgan {

bool is_distribution(const Distribution& dist, double tolerance) {
  double total = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0)) return false;
    total += p;
  }
  return !dist.empty() && std::abs(total - 1.0) <= tolerance;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("KL divergence length mismatch: " +
                                std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    total += p[i] * std::log(p[i] / std::max(q[i], kKlFloor));
  }
  return std::max(total, 0.0);
}

}  // namespace qgan
