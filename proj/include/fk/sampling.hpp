#pragma once

#include <optional>
#include <vector>

#include "fk/fourier.hpp"
#include "fk/vec.hpp"

namespace fk {

// Closed polyline realization of a knot: points[i] at params[i], with an
// implicit closing segment from the last point back to the first.
struct SampledCurve {
  std::vector<Vec3> points;
  std::vector<double> params;
  double period = 0;
  std::optional<FourierKnot> source;

  int size() const { return static_cast<int>(points.size()); }
  const Vec3& point(int i) const { return points[static_cast<std::size_t>(i)]; }
  // Endpoints of segment i, the closing segment being i = size()-1.
  const Vec3& seg_a(int i) const { return points[static_cast<std::size_t>(i)]; }
  const Vec3& seg_b(int i) const { return points[static_cast<std::size_t>((i + 1) % size())]; }

  // Parameter span of segment i (wraps through the period for the last one).
  double seg_param_a(int i) const { return params[static_cast<std::size_t>(i)]; }
  double seg_param_b(int i) const {
    return i + 1 < size() ? params[static_cast<std::size_t>(i + 1)] : period + params[0];
  }

  void validate() const;  // throws on violated invariants
};

// Builds a closed curve from bare points (uniform parameters on [0, 2*pi)).
// Drops an exactly duplicated closing point; rejects point sequences whose
// closing chord is far longer than every sampled chord.
SampledCurve closed_polyline(std::vector<Vec3> points);

// sqrt of the sum over coordinates of (sum |A*K|)^2: a global bound for the
// parametric speed |curve'(t)|.
double speed_bound(const FourierKnot& knot);

// Same construction one derivative up: a global bound for |curve''(t)|.
double acceleration_bound(const FourierKnot& knot);

// Largest deviation a chord of this sampling can have from the smooth source
// curve: acceleration_bound * dt_max^2 / 8. Zero when there is no source.
double sagitta_bound(const SampledCurve& curve);

// Uniform parameter sampling with enough points that every chord is at most
// target_chord (n = ceil(P*S/target_chord), at least 8).
SampledCurve sample(const FourierKnot& knot, double target_chord);

double max_chord(const SampledCurve& curve);
double bbox_diagonal(const std::vector<Vec3>& points);

}  // namespace fk
