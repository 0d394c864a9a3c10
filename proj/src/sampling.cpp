#include "fk/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fk/errors.hpp"

namespace fk {

void SampledCurve::validate() const {
  require(points.size() == params.size(), Err::Internal, "points/params size mismatch");
  require(points.size() >= 8, Err::TooFewSamples, "need at least 8 samples");
  require(period > 0, Err::Internal, "period must be positive");
  for (std::size_t i = 0; i + 1 < params.size(); ++i)
    require(params[i] < params[i + 1], Err::Internal, "params must increase strictly");
  require(params.front() >= 0 && params.back() < period + params.front(), Err::Internal,
          "params must lie within one period");
  for (int i = 0; i < size(); ++i)
    require((seg_b(i) - seg_a(i)).norm() > 0, Err::NotEmbedded,
            "coincident consecutive samples (degenerate curve)");
}

SampledCurve closed_polyline(std::vector<Vec3> points) {
  require(points.size() >= 2, Err::TooFewSamples, "need at least 8 points");
  double diag = bbox_diagonal(points);
  if ((points.back() - points.front()).norm() <= 1e-12 * std::max(diag, 1.0))
    points.pop_back();  // explicitly repeated closing point
  require(points.size() >= 8, Err::TooFewSamples, "need at least 8 points");

  double longest = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    longest = std::max(longest, (points[i + 1] - points[i]).norm());
  double closing = (points.back() - points.front()).norm();
  require(closing <= 3.0 * longest, Err::NotClosed,
          "closing chord is much longer than every sampled chord");

  SampledCurve curve;
  const double period = 2.0 * std::numbers::pi;
  curve.period = period;
  curve.params.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    curve.params[i] = period * static_cast<double>(i) / static_cast<double>(points.size());
  curve.points = std::move(points);
  curve.validate();
  return curve;
}

double speed_bound(const FourierKnot& knot) {
  double bx = knot.x.derivative_bound();
  double by = knot.y.derivative_bound();
  double bz = knot.z.derivative_bound();
  return std::sqrt(bx * bx + by * by + bz * bz);
}

double acceleration_bound(const FourierKnot& knot) {
  double sum2 = 0;
  for (int axis = 0; axis < 3; ++axis) {
    double b = 0;
    for (const CosTerm& t : knot.coord(axis).terms()) {
      const double k = t.freq.value();
      b += std::fabs(t.amplitude * k * k);
    }
    sum2 += b * b;
  }
  return std::sqrt(sum2);
}

double sagitta_bound(const SampledCurve& curve) {
  if (!curve.source) return 0;
  double dt_max = 0;
  for (int i = 0; i < curve.size(); ++i)
    dt_max = std::max(dt_max, curve.seg_param_b(i) - curve.seg_param_a(i));
  return acceleration_bound(*curve.source) * dt_max * dt_max / 8.0;
}

SampledCurve sample(const FourierKnot& knot, double target_chord) {
  require(target_chord > 0, Err::MalformedInput, "target chord must be positive");
  double p = period(knot);  // raises AllConstant for degenerate input
  double s = speed_bound(knot);
  int n = std::max(8, static_cast<int>(std::ceil(p * s / target_chord)));

  SampledCurve curve;
  curve.period = p;
  curve.source = knot;
  curve.points.reserve(static_cast<std::size_t>(n));
  curve.params.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = p * static_cast<double>(i) / static_cast<double>(n);
    curve.params.push_back(t);
    curve.points.push_back(knot.point(t));
  }
  curve.validate();
  return curve;
}

double max_chord(const SampledCurve& curve) {
  double m = 0;
  for (int i = 0; i < curve.size(); ++i) m = std::max(m, (curve.seg_b(i) - curve.seg_a(i)).norm());
  return m;
}

double bbox_diagonal(const std::vector<Vec3>& points) {
  if (points.empty()) return 0;
  Vec3 lo = points[0], hi = points[0];
  for (const Vec3& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return (hi - lo).norm();
}

}  // namespace fk
