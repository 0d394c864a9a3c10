#pragma once

#include <map>
#include <string>

#include "fk/bigint.hpp"

namespace fk {

// Integer-coefficient polynomial in t and 1/t. No zero coefficients are
// stored; the zero polynomial has an empty map.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial constant(long long c);
  static LaurentPolynomial monomial(BigInt coeff, int exp);

  const std::map<int, BigInt>& coefficients() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }
  BigInt coefficient(int exp) const;
  int min_exp() const;  // 0 for the zero polynomial
  int max_exp() const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial shifted(int k) const;  // multiply by t^k

  // Exact quotient in Z[t, 1/t]; throws Err::Internal when not divisible.
  LaurentPolynomial exact_div(const LaurentPolynomial& b) const;

  BigInt evaluate_int(long long x) const;  // value at an integer point

  void add_term(int exp, const BigInt& c);  // accumulate, dropping zeros

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  // Human form, highest power first: "t^2 - t + 1 - t^-1 + t^-2".
  std::string to_string() const;
  // Compact "exp:coeff" pairs in ascending exponent order, comma separated.
  std::string machine_string() const;

 private:
  std::map<int, BigInt> coeff_;
};

// Multiplies by the unit +-t^k that makes the polynomial palindromic around
// exponent zero with value 1 at t = 1: the normal form used for Alexander
// polynomials of knots. Throws Err::Internal when no such unit exists.
LaurentPolynomial alexander_normalize(const LaurentPolynomial& p);

}  // namespace fk
