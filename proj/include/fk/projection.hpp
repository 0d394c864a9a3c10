#pragma once

#include <vector>

#include "fk/sampling.hpp"
#include "fk/vec.hpp"

namespace fk {

// Right-handed image-plane basis for a viewing axis: u x v = direction, all
// three pairwise orthogonal unit vectors.
struct ProjectionFrame {
  Vec3 direction{0, 0, 1};
  Vec3 u{1, 0, 0};
  Vec3 v{0, 1, 0};

  Vec2 project(const Vec3& p) const { return {dot(p, u), dot(p, v)}; }
  double height(const Vec3& p) const { return dot(p, direction); }

  // Basis built deterministically from a viewing axis.
  static ProjectionFrame from_direction(const Vec3& direction);
  static ProjectionFrame z_axis() { return ProjectionFrame{}; }

  // Reversed viewing axis with u and v swapped, still right-handed. The image
  // is the mirrored diagram.
  ProjectionFrame mirrored() const { return {-1.0 * direction, v, u}; }

  void validate() const;  // orthonormality and handedness to 1e-12
};

// Deterministic fallback viewing axes: a golden-angle spiral over the sphere.
std::vector<Vec3> golden_angle_directions(int count);

// First preference frame whose projection of the curve is generic (diagram
// extraction succeeds); golden-angle candidates follow when every preference
// fails. Throws NoGenericProjection after 64 fallback attempts.
ProjectionFrame find_generic_projection(const SampledCurve& curve,
                                        const std::vector<ProjectionFrame>& preferences = {
                                            ProjectionFrame::z_axis()});

}  // namespace fk
