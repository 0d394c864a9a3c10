#include "fk/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "fk/embedding.hpp"
#include "fk/errors.hpp"

namespace fk {

long long linking_number(const LinkDiagram& d) {
  require(d.component_count() == 2, Err::NotTwoComponents, "linking number needs two components");
  long long sum = 0;
  for (const Crossing& c : d.crossings) {
    auto [over_comp, under_comp] = d.crossing_components(c.id);
    if (over_comp != under_comp) sum += c.sign;
  }
  if (sum % 2 != 0) raise(Err::OddSignSum, "inter-component sign sum is odd");
  return sum / 2;
}

long long conway_a(const LinkDiagram& d) {
  require(d.component_count() == 1, Err::NotAKnot, "a(K) needs a knot diagram");
  LinkDiagram work = d;
  long long total = 0;
  std::vector<int> seen;
  const std::size_t passes = work.components[0].size();
  for (std::size_t k = 0; k < passes; ++k) {
    const Visit v = work.components[0][k];
    if (std::find(seen.begin(), seen.end(), v.crossing) != seen.end()) continue;
    seen.push_back(v.crossing);
    if (v.over) continue;
    // First met on the under strand: switching makes the walked diagram
    // descending; the skein relation prices the switch at +-Lk of the
    // smoothing of the pre-switch diagram.
    const int sign_before = work.crossing(v.crossing).sign;
    total += sign_before * linking_number(smooth_crossing(work, v.crossing));
    work = switch_crossing(work, v.crossing);
  }
  return total;
}

int arf(const LinkDiagram& d) {
  long long a = conway_a(d);
  return static_cast<int>(((a % 2) + 2) % 2);
}

namespace {

struct CatalogEntry {
  std::string name;
  LaurentPolynomial alexander;
  long long determinant;
  int arf;
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&entries](std::string name, const LaurentPolynomial& alex) {
    const long long det = knot_determinant(alex);
    const int arf_value = static_cast<int>(((conway_a2_from_alexander(alex) % 2) + 2) % 2);
    entries.push_back({std::move(name), alex, det, arf_value});
  };
  add("unknot", LaurentPolynomial::constant(1));
  {
    LaurentPolynomial fig8;  // -t + 3 - 1/t
    fig8.add_term(1, BigInt(-1));
    fig8.add_term(0, BigInt(3));
    fig8.add_term(-1, BigInt(-1));
    add("figure-eight (4_1)", fig8);
  }
  for (int p = 2; p * p <= 35; ++p)
    for (int q = p + 1; p * q <= 35; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::string name = p == 2 && q == 3
                             ? "trefoil (3_1 / torus(2,3))"
                             : "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
      add(std::move(name), torus_alexander(p, q));
    }
  return entries;
}

}  // namespace

std::string identify(const LaurentPolynomial& alexander, long long determinant, int arf_value) {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  for (const CatalogEntry& e : catalog)
    if (e.alexander == alexander && e.determinant == determinant && e.arf == arf_value)
      return e.name;
  return "unidentified";
}

InvariantReport report_for_diagram(const LinkDiagram& d, const ProjectionFrame& frame,
                                   const std::string& name) {
  InvariantReport report;
  report.knot_name = name;
  report.frame = frame;
  report.crossing_count = d.crossing_count();
  report.writhe = writhe(d);
  report.a_value = conway_a(d);
  report.arf = static_cast<int>(((report.a_value % 2) + 2) % 2);
  report.alexander = alexander_polynomial(d);
  report.determinant = knot_determinant(report.alexander);
  report.verdict = identify(report.alexander, report.determinant, report.arf);
  return report;
}

PipelineResult run_pipeline(const FourierKnot& knot, double chord) {
  const FourierKnot normalized = normalize_traversal(knot);

  SampledCurve curve;
  bool embedded = false;
  double step = chord;
  for (int attempt = 0; attempt <= 3; ++attempt, step /= 2) {
    curve = sample(normalized, step);
    if (check_embedded(curve).embedded) {
      embedded = true;
      break;
    }
  }
  require(embedded, Err::NotEmbedded,
          "curve failed the embedding check down to chord " + std::to_string(step * 2));

  const ProjectionFrame frame = find_generic_projection(curve);
  LinkDiagram diagram = extract_diagram(curve, frame);
  InvariantReport report = report_for_diagram(diagram, frame, knot.name);
  return {std::move(report), std::move(diagram), std::move(curve)};
}

InvariantReport full_report(const FourierKnot& knot, double chord) {
  return run_pipeline(knot, chord).report;
}

}  // namespace fk
