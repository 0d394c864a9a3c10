#include "fk/projection.hpp"

#include <cmath>
#include <numbers>

#include "fk/diagram.hpp"
#include "fk/errors.hpp"

namespace fk {

ProjectionFrame ProjectionFrame::from_direction(const Vec3& direction) {
  const Vec3 d = normalized(direction);
  // Reference axis least aligned with the view direction, ties broken x,y,z.
  const double ax = std::fabs(d.x), ay = std::fabs(d.y), az = std::fabs(d.z);
  Vec3 ref{1, 0, 0};
  if (ay < ax && ay <= az)
    ref = {0, 1, 0};
  else if (az < ax && az < ay)
    ref = {0, 0, 1};
  const Vec3 u = normalized(cross(ref, d));
  const Vec3 v = cross(d, u);
  ProjectionFrame frame{d, u, v};
  frame.validate();
  return frame;
}

void ProjectionFrame::validate() const {
  const double tol = 1e-12;
  require(std::fabs(direction.norm() - 1) <= tol && std::fabs(u.norm() - 1) <= tol &&
              std::fabs(v.norm() - 1) <= tol,
          Err::Internal, "frame vectors must be unit length");
  require(std::fabs(dot(u, v)) <= tol && std::fabs(dot(u, direction)) <= tol &&
              std::fabs(dot(v, direction)) <= tol,
          Err::Internal, "frame vectors must be orthogonal");
  require(std::fabs(dot(cross(u, v), direction) - 1) <= tol, Err::Internal,
          "frame must be right-handed");
}

std::vector<Vec3> golden_angle_directions(int count) {
  // Fibonacci-spiral points on the sphere, a deterministic well-spread set.
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(k);
    dirs.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return dirs;
}

ProjectionFrame find_generic_projection(const SampledCurve& curve,
                                        const std::vector<ProjectionFrame>& preferences) {
  auto generic = [&curve](const ProjectionFrame& frame) {
    try {
      extract_diagram(curve, frame);
      return true;
    } catch (const KnotError& e) {
      if (e.code() == Err::NonGenericProjection) return false;
      throw;
    }
  };

  for (const ProjectionFrame& frame : preferences) {
    frame.validate();
    if (generic(frame)) return frame;
  }
  for (const Vec3& dir : golden_angle_directions(64)) {
    const ProjectionFrame frame = ProjectionFrame::from_direction(dir);
    if (generic(frame)) return frame;
  }
  raise(Err::NoGenericProjection, "no generic projection in 64 fallback attempts");
}

}  // namespace fk
