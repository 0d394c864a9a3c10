#pragma once

#include <utility>
#include <vector>

#include "fk/sampling.hpp"

namespace fk {

struct EmbeddingReport {
  double min_clearance = 0;               // least distance over admitted segment pairs
  std::pair<double, double> closest_params{0, 0};
  std::pair<int, int> closest_segments{-1, -1};
  double chord_bound = 0;                 // longest chord of the polyline
  double certificate_bound = 0;           // discretization scale the clearance must beat
  bool embedded = false;                  // min_clearance > 2 * certificate_bound
};

// Minimum distance between 3D segments [a0,a1] and [b0,b1]; optionally
// reports the closest-point fractions along each segment.
double segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1,
                        double* sa = nullptr, double* sb = nullptr);

// Decides which segment pairs count toward the clearance. Pairs that share a
// vertex are always skipped, and so is any pair whose connecting chain (on
// either side of the closed curve) turns by at most pi/2 in total: a chain
// that flat cannot cross itself, so its near-zero distances say nothing about
// embeddedness. Crossing strands force more than a half turn on both sides,
// which keeps every genuine near-crossing pair in the scan.
class PairFilter {
 public:
  explicit PairFilter(const SampledCurve& curve);
  bool included(int i, int j) const;  // i != j, order-insensitive

 private:
  int n_;
  std::vector<double> turn_prefix_;  // prefix sums of vertex turning angles
  double total_turning_;

  double forward_turning(int i, int j) const;
};

// Clearance scan over all admitted pairs, accelerated with a uniform spatial
// grid over segment midpoints. Equal to the quadratic scan, same pair, same
// value: candidate pruning is conservative and ties resolve to the smallest
// (i, j).
//
// The certificate: chords track a smooth source to within the sagitta bound,
// so a self-intersection of the source would force two admitted segments
// within twice that distance. Clearance above 2 * sagitta therefore certifies
// the smooth curve embedded at this resolution. A curve without a source is
// its own object and must clear twice the chord length instead.
EmbeddingReport check_embedded(const SampledCurve& curve);

}  // namespace fk
