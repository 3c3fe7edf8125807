#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dicut {

__extension__ typedef __int128 Int128;

// Exact non-negative-denominator fraction used for printed bounds.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  // Smallest integer >= this value.
  constexpr std::int64_t ceil() const {
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return static_cast<Int128>(a.num) * b.den < static_cast<Int128>(b.num) * a.den;
  }
  friend constexpr bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend constexpr bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dicut
