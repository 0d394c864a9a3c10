#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fk {

// Signed arbitrary-precision integer, sign-magnitude over base-2^32 limbs.
// Covers what exact Laurent-polynomial arithmetic needs: ring ops, exact
// division, comparisons, decimal I/O and residues for CRT reconstruction.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  bool is_zero() const { return limbs_.empty(); }
  int signum() const { return limbs_.empty() ? 0 : sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated division: q = trunc(a/b), r = a - q*b (r carries a's sign).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  // Division known to be exact; throws Err::Internal on a nonzero remainder.
  BigInt div_exact(const BigInt& b) const;

  int compare(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const BigInt& rhs) const { return compare(rhs) != 0; }
  bool operator<(const BigInt& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const BigInt& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const BigInt& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const BigInt& rhs) const { return compare(rhs) >= 0; }

  bool fits_int64() const;
  long long to_int64() const;  // throws Err::Internal when out of range
  double to_double() const;

  // Nonnegative residue of the signed value, in [0, m).
  std::uint64_t mod_u64(std::uint64_t m) const;

  std::string to_string() const;

 private:
  int sign_ = 1;                      // meaningful only when limbs_ nonempty
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace fk
