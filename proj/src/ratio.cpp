#include "qgan/ratio.hpp"

#include <stdexcept>

namespace qgan {

double ratio_value(const Ratio& ratio) {
  return static_cast<double>(ratio.disc_updates) /
         static_cast<double>(ratio.gen_updates);
}

bool ratio_less(const Ratio& a, const Ratio& b) {
  // cross-multiplied comparison keeps rationals exact
  const auto lhs = a.disc_updates * b.gen_updates;
  const auto rhs = b.disc_updates * a.gen_updates;
  if (lhs != rhs) return lhs < rhs;
  return a.disc_updates < b.disc_updates;
}

Ratio parse_ratio(const std::string& text) {
  const auto parse_positive = [&](const std::string& part) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid training ratio '" + text + "'");
    }
    if (used != part.size() || value < 1) {
      throw std::invalid_argument("invalid training ratio '" + text + "'");
    }
    return value;
  };

  const std::size_t slash = text.find('/');
  Ratio ratio;
  if (slash == std::string::npos) {
    ratio.disc_updates = parse_positive(text);
    ratio.gen_updates = 1;
  } else {
    ratio.disc_updates = parse_positive(text.substr(0, slash));
    ratio.gen_updates = parse_positive(text.substr(slash + 1));
  }
  return ratio;
}

std::string format_ratio(const Ratio& ratio) {
  if (ratio.gen_updates == 1) return std::to_string(ratio.disc_updates);
  return std::to_string(ratio.disc_updates) + "/" +
         std::to_string(ratio.gen_updates);
}

}  // namespace qgan
