#pragma once

#include <string>
#include <vector>

#include "fk/rational.hpp"
#include "fk/vec.hpp"

namespace fk {

// One cosine term A*cos(K*t + L). Sine terms are folded in at construction
// via sin(x) = cos(x - pi/2), so a single term shape covers both.
struct CosTerm {
  double amplitude = 0;
  Rational freq;
  double phase = 0;

  friend bool operator==(const CosTerm& a, const CosTerm& b) {
    return a.amplitude == b.amplitude && a.freq == b.freq && a.phase == b.phase;
  }
};

// Finite Fourier series, kept in canonical form:
//   - frequencies nonnegative (negative ones folded by cos(-x) = cos(x)),
//   - amplitudes positive for oscillating terms (sign folded into phase),
//   - phases reduced to [0, 2*pi),
//   - at most one zero-frequency term, stored as (value, 0, 0),
//   - terms with equal (freq, phase) merged, zero amplitudes dropped,
//   - terms sorted by (freq, phase).
class FourierSeries {
 public:
  FourierSeries() = default;
  explicit FourierSeries(std::vector<CosTerm> raw);

  static FourierSeries from_cos(double amplitude, Rational freq, double phase);

  const std::vector<CosTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool has_nonzero_frequency() const;

  double evaluate(double t) const;

  // Term-wise exact derivative; zero-frequency terms vanish.
  FourierSeries derivative() const;

  // Sum of |A*K| over terms: a bound for |d/dt| of the series.
  double derivative_bound() const;

  friend bool operator==(const FourierSeries& a, const FourierSeries& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FourierSeries& a, const FourierSeries& b) { return !(a == b); }

 private:
  std::vector<CosTerm> terms_;
};

// Convenience builder used by the knot constructors and the file parser.
class SeriesBuilder {
 public:
  SeriesBuilder& cos(double amplitude, Rational freq, double phase = 0);
  SeriesBuilder& sin(double amplitude, Rational freq, double phase = 0);
  FourierSeries build() const { return FourierSeries(terms_); }

 private:
  std::vector<CosTerm> terms_;
};

struct FourierKnot {
  FourierSeries x, y, z;
  std::string name;

  Vec3 point(double t) const { return {x.evaluate(t), y.evaluate(t), z.evaluate(t)}; }

  const FourierSeries& coord(int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }

  bool has_nonzero_frequency() const {
    return x.has_nonzero_frequency() || y.has_nonzero_frequency() || z.has_nonzero_frequency();
  }

  friend bool operator==(const FourierKnot& a, const FourierKnot& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;  // the label is not identity
  }
};

// 2*pi times the lcm of the denominators of all nonzero frequencies; the
// curve closes up exactly after this much parameter. Throws AllConstant when
// no term oscillates.
double period(const FourierKnot& knot);

// Divides every frequency by the rational gcd of the nonzero frequencies, so
// the image is traced exactly once per period. Idempotent; phases untouched.
FourierKnot normalize_traversal(const FourierKnot& knot);

// --- the knot families ---

FourierKnot lissajous(Rational k1, Rational k2, Rational k3, double l1, double l2, double l3,
                      double a1, double a2, double a3);

FourierKnot fourier_trefoil();
FourierKnot fourier_figure_eight();
FourierKnot fibonacci_knot(int n);

// Product-form torus knot point: the oracle the Fourier expansion is tested
// against.
Vec3 torus_knot_point(int p, int q, double t);
FourierKnot torus_knot_fourier(int p, int q);

}  // namespace fk
