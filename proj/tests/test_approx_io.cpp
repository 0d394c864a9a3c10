#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fk/approximate.hpp"
#include "fk/diagram.hpp"
#include "fk/embedding.hpp"
#include "fk/errors.hpp"
#include "fk/invariants.hpp"
#include "fk/io.hpp"
#include "fk/sampling.hpp"
#include "fk/svg.hpp"

using namespace fk;

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;

SampledCurve bare_polyline_of(const FourierKnot& k, int n) {
  std::vector<Vec3> pts;
  const double p = period(k);
  for (int i = 0; i < n; ++i) pts.push_back(k.point(p * i / n));
  return closed_polyline(std::move(pts));
}

bool series_close(const FourierSeries& a, const FourierSeries& b, double tol) {
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const CosTerm& ta = a.terms()[i];
    const CosTerm& tb = b.terms()[i];
    if (ta.freq != tb.freq) return false;
    if (std::fabs(ta.amplitude - tb.amplitude) > tol) return false;
    double dp = std::fabs(ta.phase - tb.phase);
    dp = std::min(dp, std::fabs(dp - kTwoPi));
    if (dp > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dft of a band-limited curve is exact") {
  const FourierKnot trefoil = fourier_trefoil();
  const SampledCurve c = sample(trefoil, 0.05);  // uniform samples over one period
  const ApproxResult r = fourier_approximate(c, 5);
  CHECK(r.max_deviation <= 1e-9);
  CHECK(series_close(r.knot.x, trefoil.x, 1e-9));
  CHECK(series_close(r.knot.y, trefoil.y, 1e-9));
  CHECK(series_close(r.knot.z, trefoil.z, 1e-9));
}

TEST_CASE("polygonal trefoil refit keeps the knot type") {
  const SampledCurve polyline = bare_polyline_of(fourier_trefoil(), 200);
  CHECK_FALSE(polyline.source.has_value());
  const LaurentPolynomial alex_in =
      alexander_polynomial(extract_diagram(polyline, find_generic_projection(polyline)));

  const ApproxResult r = fourier_approximate(polyline, 12);
  const PipelineResult out = run_pipeline(r.knot);
  CHECK(out.report.alexander == alex_in);
  CHECK(out.report.verdict == "trefoil (3_1 / torus(2,3))");
}

TEST_CASE("harmonics 0 keeps only the mean, rejected downstream") {
  const SampledCurve c = sample(fourier_figure_eight(), 0.05);
  const ApproxResult r = fourier_approximate(c, 0);
  CHECK_FALSE(r.knot.has_nonzero_frequency());
  CHECK_THROWS_AS(period(r.knot), KnotError);
  try {
    period(r.knot);
  } catch (const KnotError& e) {
    CHECK(e.code() == Err::AllConstant);
  }
}

TEST_CASE("approximation input validation") {
  const SampledCurve c = bare_polyline_of(fourier_trefoil(), 20);
  CHECK_THROWS_AS(fourier_approximate(c, 10), KnotError);  // 20 < 2*10+2

  // an open arc is not a closed curve
  std::vector<Vec3> arc;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.45 * kTwoPi * i / 50.0;
    arc.push_back({std::cos(t), std::sin(t), 0.1 * t});
  }
  CHECK_THROWS_AS(closed_polyline(arc), KnotError);
  try {
    closed_polyline(arc);
  } catch (const KnotError& e) {
    CHECK(e.code() == Err::NotClosed);
  }

  // an explicitly repeated endpoint is dropped
  std::vector<Vec3> loop;
  for (int i = 0; i <= 32; ++i) {
    const double t = kTwoPi * i / 32.0;
    loop.push_back({std::cos(t), std::sin(t), 0});
  }
  CHECK(closed_polyline(loop).size() == 32);
}

TEST_CASE("knot spec files round-trip canonically") {
  for (const FourierKnot& k : {fourier_trefoil(), fourier_figure_eight(), fibonacci_knot(6),
                               torus_knot_fourier(2, 3),
                               lissajous(Rational(3), Rational(2), Rational(7), 0.4, 1.1, 0, 1, 1, 1)}) {
    const FourierKnot back = parse_knot_spec(emit_knot_spec(k));
    CHECK(back == k);
    CHECK(back.name == (k.name.empty() ? "unnamed" : k.name));
  }
}

TEST_CASE("knot spec parsing details") {
  const FourierKnot k = parse_knot_spec(
      "# a trefoil, sine form for the second z term\n"
      "knot trefoil\n"
      "x 1 2 0\n"
      "y 1 3 0.5\n"
      "z 0.5 5 0.5   # inline comment\n"
      "z 0.5 3 0.5 sin\n");
  CHECK(k == fourier_trefoil());

  const FourierKnot half = parse_knot_spec("knot h\nx 1 1/2 0\ny 1 3/2 0\nz 1 1/2 1\n");
  CHECK(half.x.terms()[0].freq == Rational(1, 2));

  CHECK_THROWS_AS(parse_knot_spec("x 1 2 0\n"), KnotError);          // missing header
  CHECK_THROWS_AS(parse_knot_spec("knot k\nw 1 2 0\n"), KnotError);  // bad axis
  CHECK_THROWS_AS(parse_knot_spec("knot k\nx 1 2\n"), KnotError);    // missing phase
  CHECK_THROWS_AS(parse_knot_spec("knot k\nx 1 2,5 0\n"), KnotError);
}

TEST_CASE("curve csv round-trips") {
  const SampledCurve c = sample(fourier_trefoil(), 0.1);
  const std::string csv = emit_curve_csv(c);
  CHECK(csv.substr(0, 8) == "t,x,y,z\n");
  const std::vector<Vec3> pts = parse_curve_csv(csv);
  REQUIRE(static_cast<int>(pts.size()) == c.size());
  for (int i = 0; i < c.size(); ++i) {
    CHECK(pts[static_cast<std::size_t>(i)].x == c.point(i).x);  // 17 digits round-trip exactly
    CHECK(pts[static_cast<std::size_t>(i)].y == c.point(i).y);
    CHECK(pts[static_cast<std::size_t>(i)].z == c.point(i).z);
  }
}

TEST_CASE("report serialization") {
  const InvariantReport r = full_report(fourier_trefoil());
  const std::string text = report_text(r);
  CHECK(text.find("knot = trefoil\n") != std::string::npos);
  CHECK(text.find("arf = 1\n") != std::string::npos);
  CHECK(text.find("alexander = t - 1 + t^-1\n") != std::string::npos);
  CHECK(text.find("verdict = trefoil (3_1 / torus(2,3))\n") != std::string::npos);

  const std::string record = report_record(r);
  // crossings, writhe, a, arf, alexander, determinant, verdict
  CHECK(record.find("\t1\t1\t-1:1,0:-1,1:1\t3\ttrefoil") != std::string::npos);
}

TEST_CASE("svg under-strand gaps match the crossing count") {
  const PipelineResult trefoil = run_pipeline(fourier_trefoil());
  const std::string svg = render_svg(trefoil.curve, trefoil.report.frame, trefoil.diagram);
  std::size_t breaks = 0;
  for (std::size_t pos = svg.find("M ", 0); pos != std::string::npos; pos = svg.find("M ", pos + 1))
    ++breaks;
  CHECK(static_cast<int>(breaks) == trefoil.diagram.crossing_count());
  CHECK(svg.find(" Z") == std::string::npos);  // broken paths do not close

  // two renders are byte-identical
  CHECK(render_svg(trefoil.curve, trefoil.report.frame, trefoil.diagram) == svg);

  // an unknotted circle draws one unbroken closed loop
  const PipelineResult circle = run_pipeline(
      lissajous(Rational(1), Rational(1), Rational(1), 0.0, -std::numbers::pi / 2, 0.0, 1, 1, 0));
  const std::string circle_svg = render_svg(circle.curve, circle.report.frame, circle.diagram);
  std::size_t circle_breaks = 0;
  for (std::size_t pos = circle_svg.find("M ", 0); pos != std::string::npos;
       pos = circle_svg.find("M ", pos + 1))
    ++circle_breaks;
  CHECK(circle_breaks == 1);
  CHECK(circle_svg.find(" Z") != std::string::npos);
}

TEST_CASE("number formatting is locale independent") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(parse_double("-2.25e-3") == doctest::Approx(-0.00225));
  CHECK_THROWS_AS(parse_double("1,5"), KnotError);
  CHECK(format_double(0.1, 17).find('.') != std::string::npos);
}
