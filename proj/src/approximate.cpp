#include "fk/approximate.hpp"

#include <cmath>
#include <numbers>

#include "fk/errors.hpp"

namespace fk {

ApproxResult fourier_approximate(const SampledCurve& curve, int harmonics) {
  curve.validate();
  require(harmonics >= 0, Err::MalformedInput, "harmonics must be nonnegative");
  const int n = curve.size();
  require(n >= 2 * harmonics + 2, Err::TooFewSamples,
          "need at least 2*harmonics+2 samples, have " + std::to_string(n));

  const double diag = bbox_diagonal(curve.points);
  const double floor_amp = 1e-13 * std::max(1.0, diag);

  FourierKnot knot;
  knot.name = (curve.source ? curve.source->name : std::string("curve")) + "-approx";
  for (int axis = 0; axis < 3; ++axis) {
    SeriesBuilder builder;
    for (int k = 0; k <= harmonics; ++k) {
      // c_k = (1/N) sum x_j e^{-2 pi i j k / N}
      double re = 0, im = 0;
      for (int j = 0; j < n; ++j) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) * k / n;
        const Vec3& p = curve.point(j);
        const double value = axis == 0 ? p.x : axis == 1 ? p.y : p.z;
        re += value * std::cos(angle);
        im += value * std::sin(angle);
      }
      re /= n;
      im /= n;
      if (k == 0) {
        if (std::fabs(re) > floor_amp) builder.cos(re, Rational(0), 0.0);
        continue;
      }
      const double amplitude = 2.0 * std::hypot(re, im);
      if (amplitude <= floor_amp) continue;
      builder.cos(amplitude, Rational(k), std::atan2(im, re));
    }
    FourierSeries series = builder.build();
    if (axis == 0)
      knot.x = series;
    else if (axis == 1)
      knot.y = series;
    else
      knot.z = series;
  }

  // Deviation against the rescaled parameter theta_j = 2 pi j / N.
  double worst = 0;
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    worst = std::max(worst, (knot.point(theta) - curve.point(j)).norm());
  }
  return {std::move(knot), worst};
}

}  // namespace fk
