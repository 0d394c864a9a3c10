#pragma once

#include "fk/fourier.hpp"
#include "fk/sampling.hpp"

namespace fk {

struct ApproxResult {
  FourierKnot knot;
  double max_deviation = 0;  // max Euclidean gap over the input samples
};

// Truncated discrete Fourier transform of the sample sequence: per
// coordinate, keeps the mean and harmonics 1..harmonics as integer-frequency
// cosine terms in the rescaled parameter 2*pi*j/N. Band-limited inputs with
// enough samples reconstruct exactly.
ApproxResult fourier_approximate(const SampledCurve& curve, int harmonics);

}  // namespace fk
