#pragma once

#include <string>

#include "fk/diagram.hpp"
#include "fk/projection.hpp"
#include "fk/sampling.hpp"

namespace fk {

// SVG drawing of the projected curve with the under strand broken around
// every crossing (gap of 1.5% of the image diagonal on each side), so
// over/under reads off the picture. Output is a pure function of the inputs:
// one "M ... L ..." subpath per visible run, no timestamps or environment
// formatting.
std::string render_svg(const SampledCurve& curve, const ProjectionFrame& frame,
                       const LinkDiagram& diagram, int size_px = 800);

}  // namespace fk
