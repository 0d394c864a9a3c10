#include "fk/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fk/errors.hpp"

namespace fk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

double reduce_phase(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r == kTwoPi) r = 0;  // fmod can land exactly on the boundary
  return r;
}

}  // namespace

FourierSeries::FourierSeries(std::vector<CosTerm> raw) {
  double dc = 0;
  bool has_dc = false;
  std::vector<CosTerm> osc;
  for (const CosTerm& t : raw) {
    if (!std::isfinite(t.amplitude) || !std::isfinite(t.phase))
      raise(Err::MalformedInput, "non-finite term");
    if (t.amplitude == 0) continue;
    if (t.freq.is_zero()) {
      dc += t.amplitude * std::cos(t.phase);
      has_dc = true;
      continue;
    }
    CosTerm c = t;
    if (c.freq.num < 0) {  // cos(-Kt - L) = cos(Kt + L)
      c.freq = -c.freq;
      c.phase = -c.phase;
    }
    if (c.amplitude < 0) {  // -A cos = A cos shifted by pi
      c.amplitude = -c.amplitude;
      c.phase += std::numbers::pi;
    }
    c.phase = reduce_phase(c.phase);
    osc.push_back(c);
  }

  std::sort(osc.begin(), osc.end(), [](const CosTerm& a, const CosTerm& b) {
    if (a.freq != b.freq) return a.freq < b.freq;
    return a.phase < b.phase;
  });

  if (has_dc && dc != 0) terms_.push_back({dc, Rational(0), 0.0});
  for (const CosTerm& c : osc) {
    if (!terms_.empty() && terms_.back().freq == c.freq && terms_.back().phase == c.phase) {
      terms_.back().amplitude += c.amplitude;
      if (terms_.back().amplitude == 0) terms_.pop_back();
    } else {
      terms_.push_back(c);
    }
  }
}

FourierSeries FourierSeries::from_cos(double amplitude, Rational freq, double phase) {
  return FourierSeries({{amplitude, freq, phase}});
}

bool FourierSeries::has_nonzero_frequency() const {
  for (const CosTerm& t : terms_)
    if (!t.freq.is_zero()) return true;
  return false;
}

double FourierSeries::evaluate(double t) const {
  double sum = 0;
  for (const CosTerm& c : terms_) sum += c.amplitude * std::cos(c.freq.value() * t + c.phase);
  return sum;
}

FourierSeries FourierSeries::derivative() const {
  std::vector<CosTerm> out;
  for (const CosTerm& c : terms_) {
    if (c.freq.is_zero()) continue;
    out.push_back({c.amplitude * c.freq.value(), c.freq, c.phase + kHalfPi});
  }
  return FourierSeries(std::move(out));
}

double FourierSeries::derivative_bound() const {
  double sum = 0;
  for (const CosTerm& c : terms_) sum += std::fabs(c.amplitude * c.freq.value());
  return sum;
}

SeriesBuilder& SeriesBuilder::cos(double amplitude, Rational freq, double phase) {
  terms_.push_back({amplitude, freq, phase});
  return *this;
}

SeriesBuilder& SeriesBuilder::sin(double amplitude, Rational freq, double phase) {
  terms_.push_back({amplitude, freq, phase - kHalfPi});
  return *this;
}

double period(const FourierKnot& knot) {
  long long den_lcm = 1;
  bool any = false;
  for (int axis = 0; axis < 3; ++axis) {
    for (const CosTerm& t : knot.coord(axis).terms()) {
      if (t.freq.is_zero()) continue;
      any = true;
      den_lcm = std::lcm(den_lcm, t.freq.den);
    }
  }
  if (!any) raise(Err::AllConstant, "every term has zero frequency");
  return kTwoPi * static_cast<double>(den_lcm);
}

FourierKnot normalize_traversal(const FourierKnot& knot) {
  Rational g(0);
  bool any = false;
  for (int axis = 0; axis < 3; ++axis) {
    for (const CosTerm& t : knot.coord(axis).terms()) {
      if (t.freq.is_zero()) continue;
      any = true;
      g = Rational::rational_gcd(g, t.freq);
    }
  }
  if (!any) raise(Err::AllConstant, "every term has zero frequency");
  if (g == Rational(1)) return knot;

  FourierKnot out = knot;
  for (FourierSeries* s : {&out.x, &out.y, &out.z}) {
    std::vector<CosTerm> terms = s->terms();
    for (CosTerm& t : terms) {
      if (!t.freq.is_zero()) t.freq = t.freq / g;
    }
    *s = FourierSeries(std::move(terms));
  }
  return out;
}

FourierKnot lissajous(Rational k1, Rational k2, Rational k3, double l1, double l2, double l3,
                      double a1, double a2, double a3) {
  if (k1.is_zero() || k2.is_zero() || k3.is_zero())
    raise(Err::ZeroFrequency, "lissajous frequencies must be nonzero");
  FourierKnot knot;
  knot.x = FourierSeries::from_cos(a1, k1, l1);
  knot.y = FourierSeries::from_cos(a2, k2, l2);
  knot.z = FourierSeries::from_cos(a3, k3, l3);
  knot.name = "lissajous(" + k1.to_string() + "," + k2.to_string() + "," + k3.to_string() + ")";
  return knot;
}

FourierKnot fourier_trefoil() {
  FourierKnot knot;
  knot.x = SeriesBuilder().cos(1.0, Rational(2), 0.0).build();
  knot.y = SeriesBuilder().cos(1.0, Rational(3), 0.5).build();
  knot.z = SeriesBuilder().cos(0.5, Rational(5), 0.5).sin(0.5, Rational(3), 0.5).build();
  knot.name = "trefoil";
  return knot;
}

FourierKnot fourier_figure_eight() {
  FourierKnot knot;
  knot.x = SeriesBuilder().cos(1.0, Rational(1), 0.0).cos(1.0, Rational(3), 0.0).build();
  knot.y = SeriesBuilder().sin(0.6, Rational(1), 0.0).sin(1.0, Rational(3), 0.0).build();
  knot.z = SeriesBuilder().sin(0.4, Rational(3), 0.0).sin(-1.0, Rational(6), 0.0).build();
  knot.name = "figure8";
  return knot;
}

FourierKnot fibonacci_knot(int n) {
  if (n < 1) raise(Err::MalformedInput, "fibonacci index must be >= 1");
  if (n > 80) raise(Err::MalformedInput, "fibonacci index too large");
  long long f[3] = {1, 1, 2};  // f_n, f_{n+1}, f_{n+2} seeded at n = 1
  for (int i = 1; i < n; ++i) {
    long long next = f[1] + f[2];
    f[0] = f[1];
    f[1] = f[2];
    f[2] = next;
  }
  FourierKnot knot;
  knot.x = SeriesBuilder().cos(1.0, Rational(f[0]), 0.0).build();
  knot.y = SeriesBuilder().cos(1.0, Rational(f[1]), 0.5).build();
  knot.z = SeriesBuilder().cos(0.5, Rational(f[2]), 0.5).sin(0.5, Rational(f[1]), 0.5).build();
  knot.name = "fibonacci(" + std::to_string(n) + ")";
  return knot;
}

Vec3 torus_knot_point(int p, int q, double t) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) raise(Err::NotCoprime, "torus knot needs coprime p, q >= 1");
  double w = static_cast<double>(q) / static_cast<double>(p);
  double r = 1.0 + 0.5 * std::cos(w * t);
  return {std::cos(t) * r, std::sin(t) * r, 0.5 * std::sin(w * t)};
}

FourierKnot torus_knot_fourier(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) raise(Err::NotCoprime, "torus knot needs coprime p, q >= 1");
  Rational w(q, p);
  Rational one(1);
  FourierKnot knot;
  // cos(a)cos(b) and sin(a)cos(b) product-to-sum expansions of the tube form.
  knot.x = SeriesBuilder()
               .cos(1.0, one, 0.0)
               .cos(0.25, one + w, 0.0)
               .cos(0.25, one - w, 0.0)
               .build();
  knot.y = SeriesBuilder()
               .sin(1.0, one, 0.0)
               .sin(0.25, one + w, 0.0)
               .sin(0.25, one - w, 0.0)
               .build();
  knot.z = SeriesBuilder().sin(0.5, w, 0.0).build();
  knot.name = "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return knot;
}

}  // namespace fk
