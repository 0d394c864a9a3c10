#pragma once

#include <string>
#include <vector>

#include "fk/diagram.hpp"
#include "fk/invariants.hpp"

namespace fk {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
  double seconds = 0;
};

// Runs every acceptance criterion and reports one row per claim.
std::vector<CriterionResult> run_verification_suite();

// Reusable consistency checks (also the negative controls in the tests).

// arf(K) = 0 exactly when |Delta(-1)| is congruent to +-1 mod 8.
bool murasugi_check(const LinkDiagram& d);

// a(K with c positive) - a(K with c negative) = Lk(smoothing at c), at every
// crossing of a knot diagram.
bool skein_check(const LinkDiagram& d);

// Extracts the diagram under the frame and its mirror; the mirror must negate
// the writhe and every sign, swap over/under, and preserve |a| and the
// Alexander polynomial.
bool mirror_check(const SampledCurve& curve, const ProjectionFrame& frame);

}  // namespace fk
