#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fk/errors.hpp"

namespace fk {

// Exact rational, always in lowest terms with a positive denominator.
// Frequencies of Fourier terms live here so that periods and closure are
// exact instead of floating-point approximations.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) raise(Err::MalformedInput, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator-() const { return Rational(-num, den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) raise(Err::MalformedInput, "rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // gcd(a/b, c/d) = gcd(a, c) / lcm(b, d); the largest rational dividing both.
  static Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.is_zero() ? Rational(0) : Rational(b.num < 0 ? -b.num : b.num, b.den);
    if (b.is_zero()) return Rational(a.num < 0 ? -a.num : a.num, a.den);
    long long g = std::gcd(a.num < 0 ? -a.num : a.num, b.num < 0 ? -b.num : b.num);
    long long l = std::lcm(a.den, b.den);
    return Rational(g, l);
  }
};

}  // namespace fk
