#pragma once

#include <string>

#include "fk/alexander.hpp"
#include "fk/diagram.hpp"
#include "fk/fourier.hpp"
#include "fk/laurent.hpp"
#include "fk/projection.hpp"

namespace fk {

// Half the signed sum over crossings between the two components;
// self-crossings of either component do not count.
long long linking_number(const LinkDiagram& d);

// Integer invariant a(K) from the skein relation a(K+) - a(K-) = Lk(K0) and
// a(unknot) = 0, computed by descending the diagram: walk from the basepoint,
// switch every crossing first met on its under strand, and accumulate the
// signed linking number of the smoothing taken just before each switch.
long long conway_a(const LinkDiagram& d);

// a(K) mod 2.
int arf(const LinkDiagram& d);

struct InvariantReport {
  std::string knot_name;
  ProjectionFrame frame;
  int crossing_count = 0;
  int writhe = 0;
  long long a_value = 0;
  int arf = 0;
  LaurentPolynomial alexander;
  long long determinant = 0;
  std::string verdict;

  // The fields the invariants define, excluding labels and the frame.
  friend bool invariants_equal(const InvariantReport& a, const InvariantReport& b) {
    return a.crossing_count == b.crossing_count && a.writhe == b.writhe &&
           a.a_value == b.a_value && a.arf == b.arf && a.alexander == b.alexander &&
           a.determinant == b.determinant && a.verdict == b.verdict;
  }
};

// Catalog lookup on (alexander, determinant, arf): unknot, figure-eight and
// torus knots with pq <= 35. Chirality is never claimed.
std::string identify(const LaurentPolynomial& alexander, long long determinant, int arf_value);

// All invariants of an already extracted diagram.
InvariantReport report_for_diagram(const LinkDiagram& d, const ProjectionFrame& frame,
                                   const std::string& name);

// Whole pipeline: normalize traversal, sample at the chord (halving up to
// three times if the embedding check fails), find a generic projection,
// extract the diagram, compute every invariant and identify the knot.
InvariantReport full_report(const FourierKnot& knot, double chord = 0.02);

// full_report plus the diagram it measured, for callers that need both.
struct PipelineResult {
  InvariantReport report;
  LinkDiagram diagram;
  SampledCurve curve;
};
PipelineResult run_pipeline(const FourierKnot& knot, double chord = 0.02);

}  // namespace fk
