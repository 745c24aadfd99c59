#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <utility>

namespace qgan {

// Version tag written into run metadata; bump if the mixing scheme or the
// uniform/normal transforms change, so archived artifacts stay reproducible.
inline constexpr std::string_view kSeedDerivation = "splitmix64-v1";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

enum class SeedRole : std::uint64_t {
  Target = 1,
  GenInit = 2,
  DiscInit = 3,
};

// Per-trial sub-seed: mixes (master_seed, trial_index, role) so every trial
// and every role gets an independent stream, identically for every ratio.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t trial_index, SeedRole role) {
  const std::uint64_t h = splitmix64(master_seed ^ splitmix64(trial_index + 1));
  return splitmix64(h ^ static_cast<std::uint64_t>(role));
}

// Deterministic random stream. mt19937_64's bit sequence is pinned by the
// standard; the double transforms are hand-rolled because the standard
// library distributions are not portable across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on [0, 1), 53-bit resolution
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // standard normal pair via Box-Muller; consumes exactly two raw draws
  std::pair<double, double> normal_pair() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qgan
