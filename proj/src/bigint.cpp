#include "fk/bigint.hpp"

#include <algorithm>

#include "fk/errors.hpp"

namespace fk {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by widening before negation.
  unsigned long long mag = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                 : static_cast<unsigned long long>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 1;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s & 0xffffffffull);
    carry = s >> 32;
  }
  out[big.size()] = static_cast<std::uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D (schoolbook long division), quotient and remainder of
// magnitudes.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
  if (b.empty()) raise(Err::Internal, "BigInt division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    std::uint64_t d = b[0];
    q.assign(a.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  // Normalize so the divisor's top limb has its high bit set.
  int shift = 0;
  for (std::uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;

  auto shifted_left = [shift](const std::vector<std::uint32_t>& v, bool extra) {
    std::vector<std::uint32_t> out(v.size() + (extra ? 1 : 0), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = (v[i] << shift) | carry;
      carry = shift == 0 ? 0 : static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - shift));
    }
    if (extra) out[v.size()] = carry;
    return out;
  };

  std::vector<std::uint32_t> u = shifted_left(a, true);   // a.size()+1 limbs
  std::vector<std::uint32_t> v = shifted_left(b, false);  // n limbs

  q.assign(m + 1, 0);
  const std::uint64_t vtop = v[n - 1];
  const std::uint64_t vnext = v[n - 2];

  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = num / vtop;
    std::uint64_t rhat = num % vtop;
    if (qhat > 0xffffffffull) {
      qhat = 0xffffffffull;
      rhat = num - qhat * vtop;
    }
    while (rhat <= 0xffffffffull && qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }

    // u[j..j+n] -= qhat * v
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t d = static_cast<std::int64_t>(u[j + i]) - static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
      if (d < 0) {
        d += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[j + i] = static_cast<std::uint32_t>(d);
    }
    std::int64_t d = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
    if (d < 0) {
      // qhat was one too large; add the divisor back.
      d += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(u[j + i]) + v[i] + c2;
        u[j + i] = static_cast<std::uint32_t>(s & 0xffffffffull);
        c2 = s >> 32;
      }
      d += static_cast<std::int64_t>(c2);
      d &= 0xffffffffll;
    }
    u[j + n] = static_cast<std::uint32_t>(d);
    q[j] = static_cast<std::uint32_t>(qhat);
  }

  while (!q.empty() && q.back() == 0) q.pop_back();

  // Denormalize the remainder.
  r.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
  if (shift != 0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t hi = i + 1 < n ? r[i + 1] : 0;
      r[i] = (r[i] >> shift) | (hi << (32 - shift));
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.limbs_.empty()) out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.sign_ = 1;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
  } else {
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) {
      limbs_.clear();
      sign_ = 1;
    } else if (c > 0) {
      limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_mag(rhs.limbs_, limbs_);
      sign_ = rhs.sign_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  *this = *this * rhs;
  return *this;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  out.sign_ = out.limbs_.empty() ? 1 : a.sign_ * b.sign_;
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(a.limbs_, b.limbs_, qm, rm);
  q.limbs_ = std::move(qm);
  r.limbs_ = std::move(rm);
  q.sign_ = q.limbs_.empty() ? 1 : a.sign_ * b.sign_;
  r.sign_ = r.limbs_.empty() ? 1 : a.sign_;
}

BigInt BigInt::div_exact(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) raise(Err::Internal, "inexact BigInt division");
  return q;
}

int BigInt::compare(const BigInt& rhs) const {
  if (signum() != rhs.signum()) return signum() < rhs.signum() ? -1 : 1;
  int c = cmp_mag(limbs_, rhs.limbs_);
  return signum() >= 0 ? c : -c;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return sign_ > 0 ? mag <= 0x7fffffffffffffffull : mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) raise(Err::Internal, "BigInt out of int64 range");
  std::uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  return sign_ < 0 ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

double BigInt::to_double() const {
  double out = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) out = out * 4294967296.0 + limbs_[i];
  return sign_ < 0 ? -out : out;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  if (m == 0) raise(Err::Internal, "mod by zero");
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = ((rem << 32) | limbs_[i]) % m;
  }
  std::uint64_t r = static_cast<std::uint64_t>(rem);
  if (sign_ < 0 && r != 0) r = m - r;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    // Divide the magnitude by 10^9 and emit one chunk.
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

const char* err_name(Err e) {
  switch (e) {
    case Err::AllConstant: return "AllConstant";
    case Err::ZeroFrequency: return "ZeroFrequency";
    case Err::NotCoprime: return "NotCoprime";
    case Err::TooFewSamples: return "TooFewSamples";
    case Err::NotClosed: return "NotClosed";
    case Err::NotEmbedded: return "NotEmbedded";
    case Err::NoGenericProjection: return "NoGenericProjection";
    case Err::NonGenericProjection: return "NonGenericProjection";
    case Err::UnknownCrossing: return "UnknownCrossing";
    case Err::NotAKnot: return "NotAKnot";
    case Err::NotTwoComponents: return "NotTwoComponents";
    case Err::OddSignSum: return "OddSignSum";
    case Err::MalformedPD: return "MalformedPD";
    case Err::InconsistentArcs: return "InconsistentArcs";
    case Err::MalformedInput: return "MalformedInput";
    case Err::Io: return "Io";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fk
