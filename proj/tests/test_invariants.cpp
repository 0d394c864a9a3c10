#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "fk/diagram.hpp"
#include "fk/errors.hpp"
#include "fk/invariants.hpp"
#include "fk/verify.hpp"
#include "fk/sampling.hpp"

using namespace fk;

namespace {

const char* kLeftTrefoilPD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kRightTrefoilPD = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kFigureEightPD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

// Hopf link with two positive crossings, built directly.
LinkDiagram hopf_link() {
  LinkDiagram d;
  d.crossings.push_back({0, +1, 0, 0, {}});
  d.crossings.push_back({1, +1, 1, 1, {}});
  d.components.push_back({{0, true, 0}, {1, false, 1}});
  d.components.push_back({{0, false, 0}, {1, true, 1}});
  d.crossings[0].over_param = 0;
  d.crossings[0].under_param = 0;
  d.crossings[1].under_param = 1;
  d.crossings[1].over_param = 1;
  d.validate();
  return d;
}

// The same diagram restarted at a different basepoint.
LinkDiagram rotate_basepoint(const LinkDiagram& d, int shift) {
  LinkDiagram out = d;
  auto& visits = out.components[0];
  std::rotate(visits.begin(), visits.begin() + shift, visits.end());
  for (std::size_t i = 0; i < visits.size(); ++i) visits[i].param = static_cast<double>(i);
  for (Crossing& c : out.crossings)
    for (std::size_t i = 0; i < visits.size(); ++i)
      if (visits[i].crossing == c.id) (visits[i].over ? c.over_param : c.under_param) = visits[i].param;
  out.validate();
  return out;
}

}  // namespace

TEST_CASE("linking number") {
  // two disjoint circles: smooth the kink and get an empty sum
  const LinkDiagram split = smooth_crossing(diagram_from_pd("X[1,1,2,2]"), 0);
  CHECK(linking_number(split) == 0);

  CHECK(linking_number(hopf_link()) == 1);

  // smoothing a trefoil crossing leaves a Hopf-like link of linking +-1
  for (const char* pd : {kLeftTrefoilPD, kRightTrefoilPD}) {
    const LinkDiagram trefoil = diagram_from_pd(pd);
    for (const Crossing& c : trefoil.crossings)
      CHECK(std::llabs(linking_number(smooth_crossing(trefoil, c.id))) == 1);
  }

  CHECK_THROWS_AS(linking_number(diagram_from_pd(kLeftTrefoilPD)), KnotError);  // 1 component
}

TEST_CASE("conway a on standard diagrams") {
  CHECK(conway_a(diagram_from_pd("")) == 0);
  CHECK(conway_a(diagram_from_pd("X[1,1,2,2]")) == 0);  // kinked unknot
  // a(trefoil) = 1 for either chirality; hand-traced: the single switch costs
  // sign * Lk(Hopf) = (-1)(-1) = (+1)(+1) = +1.
  CHECK(conway_a(diagram_from_pd(kLeftTrefoilPD)) == 1);
  CHECK(conway_a(diagram_from_pd(kRightTrefoilPD)) == 1);
  CHECK(conway_a(diagram_from_pd(kFigureEightPD)) == -1);

  const LinkDiagram link = smooth_crossing(diagram_from_pd(kLeftTrefoilPD), 0);
  CHECK_THROWS_AS(conway_a(link), KnotError);
}

TEST_CASE("conway a agrees with the Alexander route") {
  // Two fully independent computations of a(K): the skein walk and the
  // second-moment of the normalized Alexander polynomial.
  std::vector<LinkDiagram> diagrams = {diagram_from_pd(kLeftTrefoilPD),
                                       diagram_from_pd(kRightTrefoilPD),
                                       diagram_from_pd(kFigureEightPD)};
  for (const FourierKnot& k : {fourier_trefoil(), fourier_figure_eight(),
                               normalize_traversal(torus_knot_fourier(2, 5)),
                               normalize_traversal(torus_knot_fourier(3, 4)),
                               normalize_traversal(torus_knot_fourier(3, 5)), fibonacci_knot(4)})
    diagrams.push_back(extract_diagram(sample(k, 0.02), ProjectionFrame::z_axis()));
  for (const LinkDiagram& d : diagrams)
    CHECK(conway_a(d) == conway_a2_from_alexander(alexander_polynomial(d)));
}

TEST_CASE("arf is a mod 2") {
  CHECK(arf(diagram_from_pd(kLeftTrefoilPD)) == 1);
  CHECK(arf(diagram_from_pd(kFigureEightPD)) == 1);
  CHECK(arf(diagram_from_pd("")) == 0);
  const LinkDiagram d = extract_diagram(sample(fourier_trefoil(), 0.02), ProjectionFrame::z_axis());
  CHECK(arf(d) == ((conway_a(d) % 2) + 2) % 2);
}

TEST_CASE("basepoint invariance of conway a (exhaustive, small diagrams)") {
  for (const char* pd : {kLeftTrefoilPD, kRightTrefoilPD, kFigureEightPD}) {
    const LinkDiagram d = diagram_from_pd(pd);
    const long long expect = conway_a(d);
    for (int shift = 1; shift < static_cast<int>(d.components[0].size()); ++shift)
      CHECK(conway_a(rotate_basepoint(d, shift)) == expect);
  }
  // an extracted diagram too (7 crossings = 14 starts)
  const LinkDiagram d = extract_diagram(sample(fourier_trefoil(), 0.02), ProjectionFrame::z_axis());
  const long long expect = conway_a(d);
  for (int shift = 1; shift < static_cast<int>(d.components[0].size()); ++shift)
    CHECK(conway_a(rotate_basepoint(d, shift)) == expect);
}

TEST_CASE("alexander polynomial of standard diagrams") {
  CHECK(alexander_polynomial(diagram_from_pd("")) == LaurentPolynomial::constant(1));
  CHECK(alexander_polynomial(diagram_from_pd("X[1,1,2,2]")) == LaurentPolynomial::constant(1));
  CHECK(alexander_polynomial(diagram_from_pd(kLeftTrefoilPD)) == torus_alexander(2, 3));
  CHECK(alexander_polynomial(diagram_from_pd(kRightTrefoilPD)) == torus_alexander(2, 3));

  LaurentPolynomial fig8;  // -t + 3 - 1/t
  fig8.add_term(1, BigInt(-1));
  fig8.add_term(0, BigInt(3));
  fig8.add_term(-1, BigInt(-1));
  CHECK(alexander_polynomial(diagram_from_pd(kFigureEightPD)) == fig8);

  // value 1 at t=1, for every extracted diagram
  for (const FourierKnot& k : {fourier_trefoil(), fourier_figure_eight(), fibonacci_knot(4)}) {
    const LinkDiagram d = extract_diagram(sample(k, 0.02), ProjectionFrame::z_axis());
    CHECK(alexander_polynomial(d).evaluate_int(1) == BigInt(1));
  }
}

TEST_CASE("symbolic and modular determinants agree") {
  for (const FourierKnot& k : {fourier_trefoil(), fourier_figure_eight(),
                               normalize_traversal(torus_knot_fourier(2, 5)),
                               normalize_traversal(torus_knot_fourier(3, 5)), fibonacci_knot(4)}) {
    const LinkDiagram d = extract_diagram(sample(k, 0.02), ProjectionFrame::z_axis());
    CHECK(alexander_symbolic(d) == alexander_modular(d));
  }
}

TEST_CASE("determinant values") {
  CHECK(knot_determinant(diagram_from_pd("")) == 1);
  CHECK(knot_determinant(diagram_from_pd(kLeftTrefoilPD)) == 3);
  CHECK(knot_determinant(diagram_from_pd(kFigureEightPD)) == 5);
}

TEST_CASE("identification") {
  CHECK(identify(torus_alexander(2, 3), 3, 1) == "trefoil (3_1 / torus(2,3))");
  LaurentPolynomial fig8;
  fig8.add_term(1, BigInt(-1));
  fig8.add_term(0, BigInt(3));
  fig8.add_term(-1, BigInt(-1));
  CHECK(identify(fig8, 5, 1) == "figure-eight (4_1)");
  CHECK(identify(LaurentPolynomial::constant(1), 1, 0) == "unknot");
  // a(T(2,7)) = (49-1)/8 = 6, so its arf is 0 (and det 7 = -1 mod 8 agrees)
  CHECK(identify(torus_alexander(2, 7), 7, 0) == "torus(2,7)");
  // mismatched determinant: no claim
  CHECK(identify(torus_alexander(2, 3), 5, 1) == "unidentified");
}

TEST_CASE("full reports") {
  const InvariantReport trefoil = full_report(fourier_trefoil());
  CHECK(trefoil.verdict == "trefoil (3_1 / torus(2,3))");
  CHECK(trefoil.arf == 1);
  CHECK(trefoil.a_value == 1);
  CHECK(trefoil.determinant == 3);

  const InvariantReport f3 = full_report(fibonacci_knot(3));
  CHECK(invariants_equal(f3, trefoil));

  const InvariantReport circle = full_report(
      lissajous(Rational(1), Rational(1), Rational(1), 0.0, -std::numbers::pi / 2, 0.0, 1, 1, 0));
  CHECK(circle.verdict == "unknot");
  CHECK(circle.crossing_count == 0);

  const InvariantReport t25 = full_report(torus_knot_fourier(2, 5));
  CHECK(t25.verdict == "torus(2,5)");
  CHECK(t25.alexander == torus_alexander(2, 5));
}

TEST_CASE("murasugi congruence on the built-in knots") {
  for (const FourierKnot& k : {fourier_trefoil(), fourier_figure_eight(),
                               normalize_traversal(torus_knot_fourier(3, 5)), fibonacci_knot(4)}) {
    const LinkDiagram d = extract_diagram(sample(k, 0.02), ProjectionFrame::z_axis());
    CHECK(murasugi_check(d));
  }
}

TEST_CASE("skein difference relation on standard diagrams") {
  for (const char* pd : {kLeftTrefoilPD, kRightTrefoilPD, kFigureEightPD})
    CHECK(skein_check(diagram_from_pd(pd)));
}

TEST_CASE("negative control: a corrupted sign breaks the consistency checks") {
  // Flipping one crossing sign without swapping the strands is not a valid
  // diagram move; the cross-checks must notice.
  const LinkDiagram good = extract_diagram(sample(fourier_trefoil(), 0.02), ProjectionFrame::z_axis());
  LinkDiagram bad = good;
  bad.crossings[0].sign = -bad.crossings[0].sign;
  bool caught = false;
  try {
    caught = !skein_check(bad) || !murasugi_check(bad) ||
             conway_a(bad) != conway_a2_from_alexander(alexander_polynomial(bad));
  } catch (const KnotError&) {
    caught = true;  // normalization may reject the corrupt polynomial outright
  }
  CHECK(caught);
}

TEST_CASE("writhe ignores the traversal start") {
  const LinkDiagram d = diagram_from_pd(kFigureEightPD);
  for (int shift = 1; shift < static_cast<int>(d.components[0].size()); ++shift)
    CHECK(writhe(rotate_basepoint(d, shift)) == writhe(d));
}

TEST_CASE("fibonacci F(4) invariants agree across frames") {
  const SampledCurve curve = sample(normalize_traversal(fibonacci_knot(4)), 0.02);
  std::vector<LinkDiagram> diagrams = {extract_diagram(curve, ProjectionFrame::z_axis())};
  for (const Vec3& dir : golden_angle_directions(64)) {
    if (diagrams.size() >= 3) break;
    try {
      diagrams.push_back(extract_diagram(curve, ProjectionFrame::from_direction(dir)));
    } catch (const KnotError& e) {
      if (e.code() != Err::NonGenericProjection) throw;
    }
  }
  REQUIRE(diagrams.size() == 3);
  const LaurentPolynomial alex = alexander_polynomial(diagrams[0]);
  CHECK(alex == torus_alexander(3, 5));
  for (const LinkDiagram& d : diagrams) {
    CHECK(arf(d) == arf(diagrams[0]));
    CHECK(std::llabs(conway_a(d)) == std::llabs(conway_a(diagrams[0])));
    CHECK(alexander_polynomial(d) == alex);
  }
}

TEST_CASE("unknotting the trefoil by one switch") {
  for (const char* pd : {kLeftTrefoilPD, kRightTrefoilPD}) {
    const LinkDiagram d = diagram_from_pd(pd);
    for (const Crossing& c : d.crossings) CHECK(conway_a(switch_crossing(d, c.id)) == 0);
  }
}
