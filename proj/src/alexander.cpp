#include "fk/alexander.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "fk/errors.hpp"

namespace fk {

namespace {

// Presentation matrix rows over the classical arcs (over-strands between
// consecutive underpasses). At a crossing with over arc o, incoming under
// arc i and outgoing under arc j the abelianized relation reads
//   +: (1-t)*x_o + t*x_i - x_j = 0
//   -: (1-t)*x_o - x_i + t*x_j = 0
struct PresentationMatrix {
  int size = 0;                                   // m arcs, m relations
  std::vector<std::vector<std::array<long long, 2>>> rows;  // entry = c0 + c1*t
};

PresentationMatrix build_matrix(const LinkDiagram& d) {
  require(d.component_count() == 1, Err::NotAKnot, "Alexander polynomial needs a knot diagram");
  const auto& visits = d.components[0];
  const int m = d.crossing_count();
  PresentationMatrix pm;
  pm.size = m;
  if (m == 0) return pm;

  // Underpass positions in traversal order; arc k ends at under-visit k.
  std::vector<int> under_pos;
  for (int k = 0; k < static_cast<int>(visits.size()); ++k)
    if (!visits[static_cast<std::size_t>(k)].over) under_pos.push_back(k);
  require(static_cast<int>(under_pos.size()) == m, Err::Internal, "underpass count mismatch");

  auto arc_ending_at_next_under = [&](int pos) {
    // Arc containing traversal position pos: index of the first underpass at
    // or after pos (cyclically).
    int lo = 0, hi = m;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (under_pos[static_cast<std::size_t>(mid)] < pos)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo % m;
  };

  pm.rows.assign(static_cast<std::size_t>(m),
                 std::vector<std::array<long long, 2>>(static_cast<std::size_t>(m), {0, 0}));
  std::map<int, int> dense;  // crossing id -> 0..m-1 (ids may have gaps)
  for (int k = 0; k < m; ++k) dense[d.crossings[static_cast<std::size_t>(k)].id] = k;
  std::vector<int> under_arc(static_cast<std::size_t>(m), -1);  // dense id -> incoming under arc
  std::vector<int> over_arc(static_cast<std::size_t>(m), -1);
  for (int k = 0; k < m; ++k) {
    const Visit& v = visits[static_cast<std::size_t>(under_pos[static_cast<std::size_t>(k)])];
    under_arc[static_cast<std::size_t>(dense.at(v.crossing))] = k;
  }
  for (int k = 0; k < static_cast<int>(visits.size()); ++k) {
    const Visit& v = visits[static_cast<std::size_t>(k)];
    if (v.over) over_arc[static_cast<std::size_t>(dense.at(v.crossing))] = arc_ending_at_next_under(k);
  }

  for (const Crossing& c : d.crossings) {
    const int idx = dense.at(c.id);
    const int in = under_arc[static_cast<std::size_t>(idx)];
    const int out = (in + 1) % m;
    const int over = over_arc[static_cast<std::size_t>(idx)];
    auto& r = pm.rows[static_cast<std::size_t>(idx)];
    r[static_cast<std::size_t>(over)][0] += 1;   // (1 - t)
    r[static_cast<std::size_t>(over)][1] -= 1;
    if (c.sign > 0) {
      r[static_cast<std::size_t>(in)][1] += 1;   // + t
      r[static_cast<std::size_t>(out)][0] -= 1;  // - 1
    } else {
      r[static_cast<std::size_t>(in)][0] -= 1;   // - 1
      r[static_cast<std::size_t>(out)][1] += 1;  // + t
    }
  }
  return pm;
}

// --- symbolic fraction-free determinant ---

LaurentPolynomial bareiss_determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return LaurentPolynomial::constant(1);
  int sign = 1;
  LaurentPolynomial prev = LaurentPolynomial::constant(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {};
    if (pivot != col) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
      sign = -sign;
    }
    const auto& prow = m[static_cast<std::size_t>(col)];
    for (int r = col + 1; r < k; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      for (int c = col + 1; c < k; ++c) {
        LaurentPolynomial num = prow[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(c)] -
                                row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(c)];
        row[static_cast<std::size_t>(c)] = num.exact_div(prev);
      }
      row[static_cast<std::size_t>(col)] = {};
    }
    prev = prow[static_cast<std::size_t>(col)];
  }
  LaurentPolynomial det = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
  return sign < 0 ? -det : det;
}

// --- modular determinant with interpolation and CRT ---

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

// det of the minor evaluated at integer x, mod p.
std::uint64_t minor_det_mod(const PresentationMatrix& pm, std::uint64_t x, std::uint64_t p) {
  const int k = pm.size - 1;
  std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(k),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(k)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      const auto& e = pm.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      long long v0 = e[0] % static_cast<long long>(p);
      long long v1 = e[1] % static_cast<long long>(p);
      std::uint64_t a = v0 >= 0 ? static_cast<std::uint64_t>(v0) : p - static_cast<std::uint64_t>(-v0);
      std::uint64_t b = v1 >= 0 ? static_cast<std::uint64_t>(v1) : p - static_cast<std::uint64_t>(-v1);
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (a + mulmod(b, x, p)) % p;
    }

  std::uint64_t det = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
      det = p - det;
    }
    const std::uint64_t pv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det = mulmod(det, pv, p);
    const std::uint64_t inv = invmod(pv, p);
    for (int r = col + 1; r < k; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      const std::uint64_t f = mulmod(row[static_cast<std::size_t>(col)], inv, p);
      if (f == 0) continue;
      for (int c = col; c < k; ++c) {
        const std::uint64_t sub = mulmod(f, m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)], p);
        row[static_cast<std::size_t>(c)] = (row[static_cast<std::size_t>(c)] + p - sub) % p;
      }
    }
  }
  return det % p;
}

// Newton interpolation of the degree <= deg polynomial through
// (x_i, y_i mod p), coefficients in the monomial basis.
std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& ys, std::uint64_t p) {
  const int n = static_cast<int>(ys.size());  // points are x = 0..n-1
  std::vector<std::uint64_t> divided = ys;
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i) {
      std::uint64_t num = (divided[static_cast<std::size_t>(i)] + p -
                           divided[static_cast<std::size_t>(i - 1)]) % p;
      divided[static_cast<std::size_t>(i)] = mulmod(num, invmod(static_cast<std::uint64_t>(level), p), p);
    }
  // Expand Newton form sum divided[i] * prod_{j<i} (x - j).
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> basis(static_cast<std::size_t>(n), 0);
  basis[0] = 1;
  int basis_deg = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= basis_deg; ++k) {
      coeffs[static_cast<std::size_t>(k)] =
          (coeffs[static_cast<std::size_t>(k)] +
           mulmod(divided[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(k)], p)) % p;
    }
    if (i + 1 < n) {
      // basis *= (x - i)
      const std::uint64_t xi = p - static_cast<std::uint64_t>(i) % p;
      for (int k = basis_deg + 1; k >= 1; --k)
        basis[static_cast<std::size_t>(k)] =
            (basis[static_cast<std::size_t>(k - 1)] +
             mulmod(basis[static_cast<std::size_t>(k)], xi, p)) % p;
      basis[0] = mulmod(basis[0], xi, p);
      ++basis_deg;
    }
  }
  return coeffs;
}

std::vector<std::uint64_t> modulus_list(int count) {
  std::vector<std::uint64_t> primes;
  std::uint64_t candidate = (1ull << 61) + 1;
  while (static_cast<int>(primes.size()) < count) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate += 2;
  }
  return primes;
}

}  // namespace

LaurentPolynomial alexander_symbolic(const LinkDiagram& d) {
  PresentationMatrix pm = build_matrix(d);
  const int k = pm.size - 1;
  if (pm.size == 0) return LaurentPolynomial::constant(1);
  std::vector<std::vector<LaurentPolynomial>> m(static_cast<std::size_t>(k),
                                                std::vector<LaurentPolynomial>(static_cast<std::size_t>(k)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      const auto& e = pm.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      LaurentPolynomial entry;
      entry.add_term(0, BigInt(e[0]));
      entry.add_term(1, BigInt(e[1]));
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry;
    }
  LaurentPolynomial det = bareiss_determinant(std::move(m));
  return alexander_normalize(det);
}

LaurentPolynomial alexander_modular(const LinkDiagram& d) {
  PresentationMatrix pm = build_matrix(d);
  if (pm.size == 0) return LaurentPolynomial::constant(1);
  const int deg = pm.size - 1;        // minor determinant degree bound
  const int points = deg + 1;

  const std::vector<std::uint64_t> primes = modulus_list(24);
  std::vector<std::vector<std::uint64_t>> residues;  // per prime: coefficients
  BigInt modulus(1);
  std::vector<BigInt> lifted(static_cast<std::size_t>(points), BigInt(0));
  std::vector<BigInt> prev_lifted;

  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const std::uint64_t p = primes[pi];
    std::vector<std::uint64_t> ys(static_cast<std::size_t>(points));
    for (int x = 0; x < points; ++x)
      ys[static_cast<std::size_t>(x)] = minor_det_mod(pm, static_cast<std::uint64_t>(x), p);
    residues.push_back(interpolate_mod(ys, p));

    // Incremental CRT with symmetric lift.
    const std::vector<std::uint64_t>& coeffs = residues.back();
    BigInt new_modulus = modulus * BigInt(static_cast<long long>(p));
    for (int k = 0; k < points; ++k) {
      // value = lifted + modulus * delta, delta chosen mod p.
      const std::uint64_t target = coeffs[static_cast<std::size_t>(k)];
      const std::uint64_t cur = lifted[static_cast<std::size_t>(k)].mod_u64(p);
      const std::uint64_t mmod = modulus.mod_u64(p);
      const std::uint64_t delta = mulmod((target + p - cur) % p, invmod(mmod, p), p);
      lifted[static_cast<std::size_t>(k)] =
          lifted[static_cast<std::size_t>(k)] + modulus * BigInt(static_cast<long long>(delta));
      // Symmetric representative in (-M/2, M/2].
      BigInt half_check = lifted[static_cast<std::size_t>(k)] + lifted[static_cast<std::size_t>(k)];
      if (half_check > new_modulus)
        lifted[static_cast<std::size_t>(k)] = lifted[static_cast<std::size_t>(k)] - new_modulus;
    }
    modulus = new_modulus;

    if (!prev_lifted.empty() && prev_lifted == lifted) {
      LaurentPolynomial det;
      for (int k = 0; k < points; ++k) det.add_term(k, lifted[static_cast<std::size_t>(k)]);
      return alexander_normalize(det);
    }
    prev_lifted = lifted;
  }
  raise(Err::Internal, "modular Alexander reconstruction did not stabilize");
}

LaurentPolynomial alexander_polynomial(const LinkDiagram& d) {
  require(d.component_count() == 1, Err::NotAKnot, "Alexander polynomial needs a knot diagram");
  return d.crossing_count() <= 40 ? alexander_symbolic(d) : alexander_modular(d);
}

long long knot_determinant(const LaurentPolynomial& normalized_alexander) {
  BigInt v = normalized_alexander.evaluate_int(-1);
  if (v.signum() < 0) v = -v;
  return v.to_int64();
}

long long knot_determinant(const LinkDiagram& d) {
  return knot_determinant(alexander_polynomial(d));
}

LaurentPolynomial torus_alexander(int p, int q) {
  require(p >= 2 && q >= 2 && std::gcd(p, q) == 1, Err::NotCoprime,
          "torus Alexander needs coprime p, q >= 2");
  auto power_minus_one = [](int e) {
    LaurentPolynomial poly;
    poly.add_term(e, BigInt(1));
    poly.add_term(0, BigInt(-1));
    return poly;
  };
  const LaurentPolynomial numerator = power_minus_one(p * q) * power_minus_one(1);
  const LaurentPolynomial quotient =
      numerator.exact_div(power_minus_one(p)).exact_div(power_minus_one(q));
  return alexander_normalize(quotient);
}

long long conway_a2_from_alexander(const LaurentPolynomial& normalized_alexander) {
  // Delta(e^x) = 1 + a2 x^2 + O(x^4) for the symmetric normal form, so
  // a2 = (1/2) sum n^2 c_n.
  long long weighted = 0;
  for (const auto& [e, c] : normalized_alexander.coefficients())
    weighted += static_cast<long long>(e) * e * c.to_int64();
  require(weighted % 2 == 0, Err::Internal, "second-moment sum must be even");
  return weighted / 2;
}

}  // namespace fk
