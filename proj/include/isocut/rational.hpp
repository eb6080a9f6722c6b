#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "isocut/errors.hpp"

namespace isocut {

/// Nonnegative exact ratio num/den with den > 0, or +infinity. Comparisons
/// cross-multiply in 128-bit arithmetic.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den <= 0 || num < 0) throw InvalidInput("ratio needs num >= 0 and den > 0");
    auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  static constexpr Ratio infinity() {
    Ratio r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return inf_; }
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return inf_ ? __builtin_inf() : static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const {
    return inf_ ? "inf" : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_ ? std::strong_ordering::equal
                                  : a.inf_ ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater
                                                      : std::strong_ordering::equal;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

/// Parses "p/q", an integer, or a decimal such as "0.25".
Ratio parse_ratio(const std::string& text);

}  // namespace isocut
