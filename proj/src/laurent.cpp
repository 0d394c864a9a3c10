#include "fk/laurent.hpp"

#include "fk/errors.hpp"

namespace fk {

LaurentPolynomial LaurentPolynomial::constant(long long c) {
  LaurentPolynomial p;
  p.add_term(0, BigInt(c));
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(BigInt coeff, int exp) {
  LaurentPolynomial p;
  p.add_term(exp, coeff);
  return p;
}

BigInt LaurentPolynomial::coefficient(int exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_exp() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
int LaurentPolynomial::max_exp() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

void LaurentPolynomial::add_term(int exp, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeff_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeff_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.coeff_.emplace(e, -c);
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.coeff_) out.add_term(e, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.coeff_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.coeff_)
    for (const auto& [eb, cb] : b.coeff_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.coeff_.emplace(e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::exact_div(const LaurentPolynomial& b) const {
  if (b.is_zero()) raise(Err::Internal, "Laurent division by zero");
  if (is_zero()) return {};
  // Long division from the top; exactness keeps every step in Z.
  LaurentPolynomial rem = *this;
  LaurentPolynomial quot;
  const int bdeg = b.max_exp();
  const BigInt& blead = b.coeff_.rbegin()->second;
  const int quot_min = min_exp() - b.min_exp();  // lowest exponent an exact quotient can use
  while (!rem.is_zero() && rem.max_exp() - bdeg >= quot_min) {
    const int e = rem.max_exp() - bdeg;
    BigInt q, r;
    BigInt::divmod(rem.coeff_.rbegin()->second, blead, q, r);
    if (!r.is_zero()) raise(Err::Internal, "inexact Laurent division");
    quot.add_term(e, q);
    for (const auto& [eb, cb] : b.coeff_) rem.add_term(eb + e, -(q * cb));
  }
  if (!rem.is_zero()) raise(Err::Internal, "inexact Laurent division");
  return quot;
}

BigInt LaurentPolynomial::evaluate_int(long long x) const {
  if (coeff_.empty()) return BigInt(0);
  if (x == 0) raise(Err::Internal, "cannot evaluate a Laurent polynomial at 0");
  // Horner over the nonnegative-shifted polynomial, then divide by x^(-min).
  const int lo = min_exp();
  BigInt acc(0);
  int prev_exp = max_exp();
  const BigInt bx(x);
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    for (int k = it->first; k < prev_exp; ++k) acc *= bx;
    acc += it->second;
    prev_exp = it->first;
  }
  if (lo < 0) {
    // Negative powers contribute exactly only when x = +-1; shift instead.
    BigInt denom(1);
    for (int k = 0; k < -lo; ++k) denom *= bx;
    return acc.div_exact(denom);
  }
  for (int k = 0; k < lo; ++k) acc *= bx;
  return acc;
}

std::string LaurentPolynomial::to_string() const {
  if (coeff_.empty()) return "0";
  std::string out;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c.signum() < 0;
    const BigInt mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit_coeff = mag == BigInt(1);
    if (!unit_coeff || e == 0) out += mag.to_string();
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string LaurentPolynomial::machine_string() const {
  if (coeff_.empty()) return "0:0";
  std::string out;
  for (const auto& [e, c] : coeff_) {
    if (!out.empty()) out += ",";
    out += std::to_string(e) + ":" + c.to_string();
  }
  return out;
}

LaurentPolynomial alexander_normalize(const LaurentPolynomial& p) {
  require(!p.is_zero(), Err::Internal, "cannot normalize the zero polynomial");
  const int lo = p.min_exp();
  const int hi = p.max_exp();
  require((lo + hi) % 2 == 0, Err::Internal, "Alexander span has no integer center");
  LaurentPolynomial centered = p.shifted(-(lo + hi) / 2);
  for (const auto& [e, c] : centered.coefficients())
    require(c == centered.coefficient(-e), Err::Internal, "polynomial is not palindromic");
  const BigInt at_one = centered.evaluate_int(1);
  if (at_one == BigInt(1)) return centered;
  if (at_one == BigInt(-1)) return -centered;
  raise(Err::Internal, "polynomial value at 1 is not a unit");
}

}  // namespace fk
