#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fk/errors.hpp"
#include "fk/fourier.hpp"

using namespace fk;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
}  // namespace

TEST_CASE("series evaluation") {
  const FourierKnot trefoil = fourier_trefoil();
  CHECK(trefoil.x.evaluate(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(FourierSeries().evaluate(3.7) == 0.0);
  // z(0) = 0.5 cos(1/2) + 0.5 sin(1/2), straight arithmetic
  const double expect = 0.5 * std::cos(0.5) + 0.5 * std::sin(0.5);
  CHECK(trefoil.z.evaluate(0) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("point evaluation and closure") {
  const FourierKnot trefoil = fourier_trefoil();
  const Vec3 p0 = trefoil.point(0);
  CHECK(p0.x == doctest::Approx(1.0));
  CHECK(p0.y == doctest::Approx(std::cos(0.5)));
  CHECK(p0.z == doctest::Approx(0.5 * std::cos(0.5) + 0.5 * std::sin(0.5)));

  const FourierKnot fig8 = fourier_figure_eight();
  const Vec3 q0 = fig8.point(0);
  CHECK(q0.x == doctest::Approx(2.0));
  CHECK(q0.y == doctest::Approx(0.0));
  CHECK(q0.z == doctest::Approx(0.0));

  // closure at the period, for every constructor
  std::vector<FourierKnot> knots = {fourier_trefoil(),    fourier_figure_eight(),
                                    fibonacci_knot(1),    fibonacci_knot(6),
                                    torus_knot_fourier(2, 3), torus_knot_fourier(3, 5),
                                    lissajous(Rational(3), Rational(2), Rational(7), 0.2, 0.7, 0, 1, 1, 1)};
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> td(0, 10);
  for (const FourierKnot& k : knots) {
    const double p = period(k);
    const Vec3 a = k.point(0), b = k.point(p);
    CHECK(std::fabs(a.x - b.x) < 1e-12);
    CHECK(std::fabs(a.y - b.y) < 1e-12);
    CHECK(std::fabs(a.z - b.z) < 1e-12);
    for (int i = 0; i < 20; ++i) {
      const double t = td(rng);
      CHECK((k.point(t) - k.point(t + p)).norm() < 1e-12);
    }
  }
}

TEST_CASE("derivative is exact term surgery") {
  const FourierSeries s = FourierSeries::from_cos(1.0, Rational(2), 0.0);
  const FourierSeries ds = s.derivative();
  REQUIRE(ds.terms().size() == 1);
  CHECK(ds.terms()[0].amplitude == 2.0);
  CHECK(ds.terms()[0].freq == Rational(2));
  CHECK(ds.terms()[0].phase == doctest::Approx(kPi / 2));

  CHECK(FourierSeries::from_cos(5.0, Rational(0), 0.0).derivative().empty());

  const FourierSeries dy = fourier_trefoil().y.derivative();
  REQUIRE(dy.terms().size() == 1);
  CHECK(dy.terms()[0].amplitude == 3.0);
  CHECK(dy.terms()[0].phase == doctest::Approx(0.5 + kPi / 2));
}

TEST_CASE("derivative agrees with centered finite differences") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> td(0, kTwoPi);
  const double h = 1e-6;
  for (const FourierKnot& k : {fourier_trefoil(), fourier_figure_eight(), torus_knot_fourier(2, 3)}) {
    for (int axis = 0; axis < 3; ++axis) {
      const FourierSeries& s = k.coord(axis);
      const FourierSeries ds = s.derivative();
      for (int i = 0; i < 100; ++i) {
        const double t = td(rng);
        const double numeric = (s.evaluate(t + h) - s.evaluate(t - h)) / (2 * h);
        const double exact = ds.evaluate(t);
        CHECK(std::fabs(numeric - exact) <= 1e-6 * std::max(1.0, std::fabs(exact)));
      }
    }
  }
}

TEST_CASE("sine convention round-trips") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ad(-2, 2), pd(-7, 7), td(0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const double a = ad(rng), phase = pd(rng);
    const Rational freq(1 + static_cast<int>(rng() % 9));
    const FourierSeries s = SeriesBuilder().sin(a, freq, phase).build();
    for (int j = 0; j < 10; ++j) {
      const double t = td(rng);
      CHECK(std::fabs(s.evaluate(t) - a * std::sin(freq.value() * t + phase)) < 1e-14 * (1 + std::fabs(a)));
    }
  }
}

TEST_CASE("canonical form merges and folds") {
  // negative frequency folds, negative amplitude becomes a pi phase shift
  const FourierSeries folded = FourierSeries({{-1.0, Rational(-2), 0.25}});
  REQUIRE(folded.terms().size() == 1);
  CHECK(folded.terms()[0].freq == Rational(2));
  CHECK(folded.terms()[0].amplitude == 1.0);
  // equal (freq, phase) merge; zero amplitude drops
  const FourierSeries merged = FourierSeries({{1.0, Rational(3), 0.5}, {2.0, Rational(3), 0.5}});
  REQUIRE(merged.terms().size() == 1);
  CHECK(merged.terms()[0].amplitude == 3.0);
  CHECK(FourierSeries({{0.0, Rational(3), 0.5}}).empty());
}

TEST_CASE("period from denominators") {
  CHECK(period(fourier_trefoil()) == doctest::Approx(kTwoPi));
  CHECK(period(torus_knot_fourier(2, 3)) == doctest::Approx(2 * kTwoPi));
  CHECK(period(fibonacci_knot(6)) == doctest::Approx(kTwoPi));
  FourierKnot constant;
  constant.x = FourierSeries::from_cos(1.0, Rational(0), 0.0);
  CHECK_THROWS_AS(period(constant), KnotError);
  try {
    period(constant);
  } catch (const KnotError& e) {
    CHECK(e.code() == Err::AllConstant);
  }
}

TEST_CASE("normalize_traversal divides out the rational gcd") {
  FourierKnot k;
  k.x = FourierSeries::from_cos(1, Rational(4), 0);
  k.y = FourierSeries::from_cos(1, Rational(6), 0.3);
  k.z = FourierSeries::from_cos(1, Rational(10), 0.7);
  const FourierKnot n = normalize_traversal(k);
  CHECK(n.x.terms()[0].freq == Rational(2));
  CHECK(n.y.terms()[0].freq == Rational(3));
  CHECK(n.z.terms()[0].freq == Rational(5));
  CHECK(n.y.terms()[0].phase == 0.3);  // phases untouched

  CHECK(normalize_traversal(fourier_trefoil()) == fourier_trefoil());

  FourierKnot h;
  h.x = FourierSeries::from_cos(1, Rational(1, 2), 0);
  h.y = FourierSeries::from_cos(1, Rational(3, 2), 0);
  h.z = FourierSeries::from_cos(1, Rational(1, 2), 1);
  const FourierKnot hn = normalize_traversal(h);
  CHECK(hn.x.terms()[0].freq == Rational(1));
  CHECK(hn.y.terms()[0].freq == Rational(3));

  // idempotent
  CHECK(normalize_traversal(n) == n);
  CHECK(normalize_traversal(hn) == hn);

  // image preserved: points match at t vs g*t
  const double g = 2.0;  // k's frequencies were divided by 2
  for (int i = 0; i < 200; ++i) {
    const double t = kTwoPi * i / 200.0;
    CHECK((k.point(t) - n.point(g * t)).norm() < 1e-9);
  }
}

TEST_CASE("lissajous constructor shape") {
  const FourierKnot l = lissajous(Rational(2), Rational(3), Rational(5), 0.5, 0.5, 0.5, 1, 1, 1);
  CHECK(l.x.terms().size() == 1);
  CHECK(l.y.terms().size() == 1);
  CHECK(l.z.terms().size() == 1);
  CHECK_THROWS_AS(lissajous(Rational(0), Rational(3), Rational(5), 0, 0, 0, 1, 1, 1), KnotError);
}

TEST_CASE("trefoil series match the defining equations") {
  const FourierKnot t = fourier_trefoil();
  REQUIRE(t.x.terms().size() == 1);
  CHECK(t.x.terms()[0].amplitude == 1.0);
  CHECK(t.x.terms()[0].freq == Rational(2));
  CHECK(t.x.terms()[0].phase == 0.0);
  REQUIRE(t.z.terms().size() == 2);
  // canonical order: frequency 3 (the sine term) then 5
  CHECK(t.z.terms()[0].freq == Rational(3));
  CHECK(t.z.terms()[0].amplitude == 0.5);
  CHECK(t.z.terms()[1].freq == Rational(5));
  CHECK(t.z.terms()[1].phase == 0.5);
  // the converted sine term evaluates as 0.5 sin(3t + 0.5)
  for (double x : {0.0, 0.9, 2.4}) {
    const double sine_part = t.z.evaluate(x) - 0.5 * std::cos(5 * x + 0.5);
    CHECK(sine_part == doctest::Approx(0.5 * std::sin(3 * x + 0.5)).epsilon(1e-13));
  }
}

TEST_CASE("figure eight series match the defining equations") {
  const FourierKnot f = fourier_figure_eight();
  REQUIRE(f.x.terms().size() == 2);
  CHECK(f.x.terms()[0].freq == Rational(1));
  CHECK(f.x.terms()[1].freq == Rational(3));
  REQUIRE(f.y.terms().size() == 2);
  CHECK(f.y.terms()[0].amplitude == doctest::Approx(0.6));
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> td(0, kTwoPi);
  for (int i = 0; i < 50; ++i) {
    const double t = td(rng);
    CHECK(f.x.evaluate(t) == doctest::Approx(std::cos(t) + std::cos(3 * t)).epsilon(1e-13));
    CHECK(f.y.evaluate(t) == doctest::Approx(0.6 * std::sin(t) + std::sin(3 * t)).epsilon(1e-13));
    CHECK(f.z.evaluate(t) == doctest::Approx(0.4 * std::sin(3 * t) - std::sin(6 * t)).epsilon(1e-13));
  }
}

TEST_CASE("fibonacci family") {
  CHECK(fibonacci_knot(3) == fourier_trefoil());

  const FourierKnot f6 = fibonacci_knot(6);
  CHECK(f6.x.terms()[0].freq == Rational(8));
  CHECK(f6.y.terms()[0].freq == Rational(13));
  REQUIRE(f6.z.terms().size() == 2);
  CHECK(f6.z.terms()[0].freq == Rational(13));
  CHECK(f6.z.terms()[1].freq == Rational(21));

  const FourierKnot f1 = fibonacci_knot(1);
  CHECK(f1.x.terms()[0].freq == Rational(1));
  CHECK(f1.y.terms()[0].freq == Rational(1));
  CHECK(f1.z.terms()[0].freq == Rational(1));
  CHECK(f1.z.terms()[1].freq == Rational(2));

  CHECK_THROWS_AS(fibonacci_knot(0), KnotError);
}

TEST_CASE("torus knot product form") {
  const Vec3 p0 = torus_knot_point(2, 3, 0);
  CHECK(p0.x == doctest::Approx(1.5));
  CHECK(p0.y == doctest::Approx(0.0));
  CHECK(p0.z == doctest::Approx(0.0));

  // stays in the tube of radius 1/2 about the unit circle
  for (int i = 0; i < 2000; ++i) {
    const double t = 2 * kTwoPi * i / 2000.0;
    const Vec3 p = torus_knot_point(2, 3, t);
    CHECK(std::fabs(std::hypot(p.x, p.y) - 1.0) <= 0.5 + 1e-12);
  }

  CHECK_THROWS_AS(torus_knot_point(2, 4, 0.0), KnotError);
  CHECK_THROWS_AS(torus_knot_fourier(6, 9), KnotError);
}

TEST_CASE("torus knot fourier expansion agrees pointwise") {
  const FourierKnot t23 = torus_knot_fourier(2, 3);
  std::vector<Rational> xfreqs;
  for (const CosTerm& term : t23.x.terms()) xfreqs.push_back(term.freq);
  REQUIRE(xfreqs.size() == 3);
  CHECK(xfreqs[0] == Rational(1, 2));
  CHECK(xfreqs[1] == Rational(1));
  CHECK(xfreqs[2] == Rational(5, 2));

  const int pairs[4][2] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
  for (const auto& pq : pairs) {
    const FourierKnot k = torus_knot_fourier(pq[0], pq[1]);
    const double p = period(k);
    for (int i = 0; i < 1000; ++i) {
      const double t = p * i / 1000.0;
      CHECK((k.point(t) - torus_knot_point(pq[0], pq[1], t)).norm() < 1e-12);
    }
  }
}

TEST_CASE("rational gcd helper") {
  CHECK(Rational::rational_gcd(Rational(4), Rational(6)) == Rational(2));
  CHECK(Rational::rational_gcd(Rational(1, 2), Rational(3, 2)) == Rational(1, 2));
  CHECK(Rational::rational_gcd(Rational(0), Rational(5)) == Rational(5));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
}
