#pragma once

#include <cstdint>
#include <string>

namespace qgan {

/// Training ratio d:g — d discriminator updates and g generator updates per
/// epoch. Kept as the exact pair the user gave (never reduced, never a
/// float): 2/16 and 1/8 describe different epoch structures.
struct Ratio {
  std::int64_t disc_updates = 1;
  std::int64_t gen_updates = 1;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Numeric value d/g, for ordering and curve fitting only.
double ratio_value(const Ratio& ratio);

/// Strict ordering by value, then by d (so 2/16 sorts after 1/8).
bool ratio_less(const Ratio& a, const Ratio& b);

/// Accepts "5" (= 5/1) or "1/8"; both parts must be positive integers.
Ratio parse_ratio(const std::string& text);

/// "5" for d/1, otherwise "d/g".
std::string format_ratio(const Ratio& ratio);

}  // namespace qgan
