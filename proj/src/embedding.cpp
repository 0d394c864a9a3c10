#include "fk/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "fk/errors.hpp"

namespace fk {

double segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1,
                        double* sa, double* sb) {
  // Closest points of two segments (Ericson, Real-Time Collision Detection).
  const Vec3 d1 = a1 - a0;
  const Vec3 d2 = b1 - b0;
  const Vec3 r = a0 - b0;
  const double a = d1.norm2();
  const double e = d2.norm2();
  const double f = dot(d2, r);

  double s = 0, t = 0;
  if (a == 0 && e == 0) {
    // both degenerate
  } else if (a == 0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e == 0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      if (denom > 0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  if (sa) *sa = s;
  if (sb) *sb = t;
  const Vec3 diff = (a0 + s * d1) - (b0 + t * d2);
  return diff.norm();
}

PairFilter::PairFilter(const SampledCurve& curve) : n_(curve.size()) {
  // turn[k]: exterior angle at vertex k, between segments k-1 and k.
  turn_prefix_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
  for (int k = 0; k < n_; ++k) {
    Vec3 prev = curve.seg_b((k + n_ - 1) % n_) - curve.seg_a((k + n_ - 1) % n_);
    Vec3 next = curve.seg_b(k) - curve.seg_a(k);
    double denom = prev.norm() * next.norm();
    double c = denom > 0 ? std::clamp(dot(prev, next) / denom, -1.0, 1.0) : 1.0;
    turn_prefix_[static_cast<std::size_t>(k) + 1] =
        turn_prefix_[static_cast<std::size_t>(k)] + std::acos(c);
  }
  total_turning_ = turn_prefix_[static_cast<std::size_t>(n_)];
}

// Total turning of the chain of segments i..j walked forward, i.e. the sum of
// the vertex angles strictly between them: vertices i+1 .. j (cyclic).
double PairFilter::forward_turning(int i, int j) const {
  if (j >= i) return turn_prefix_[static_cast<std::size_t>(j) + 1] - turn_prefix_[static_cast<std::size_t>(i) + 1];
  return (total_turning_ - turn_prefix_[static_cast<std::size_t>(i) + 1]) +
         turn_prefix_[static_cast<std::size_t>(j) + 1];
}

bool PairFilter::included(int i, int j) const {
  if (i == j) return false;
  int d = std::abs(i - j);
  if (d == 1 || d == n_ - 1) return false;  // shared vertex
  double side_a = forward_turning(std::min(i, j), std::max(i, j));
  double side_b = total_turning_ - side_a;
  return std::min(side_a, side_b) > std::numbers::pi / 2.0;
}

namespace {

struct CellKey {
  long long x, y, z;
  bool operator==(const CellKey& o) const { return x == o.x && y == o.y && z == o.z; }
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::uint64_t>(k.y) * 0xc2b2ae3d27d4eb4full + (h << 6);
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667b19e3779f9ull + (h >> 3);
    return static_cast<std::size_t>(h);
  }
};

struct Best {
  double dist = std::numeric_limits<double>::infinity();
  int i = -1, j = -1;
  double si = 0, sj = 0;

  void offer(double d, int a, int b, double sa, double sb) {
    if (a > b) {
      std::swap(a, b);
      std::swap(sa, sb);
    }
    if (d < dist || (d == dist && std::pair(a, b) < std::pair(i, j))) {
      dist = d;
      i = a;
      j = b;
      si = sa;
      sj = sb;
    }
  }
};

}  // namespace

EmbeddingReport check_embedded(const SampledCurve& curve) {
  curve.validate();
  const int n = curve.size();
  const PairFilter filter(curve);

  double longest = 0;
  std::vector<Vec3> mid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    longest = std::max(longest, (curve.seg_b(i) - curve.seg_a(i)).norm());
    mid[static_cast<std::size_t>(i)] = 0.5 * (curve.seg_a(i) + curve.seg_b(i));
  }

  // Seed the upper bound with antipodal pairs so the grid radius starts
  // tight. Distances are always evaluated with the lower segment first so the
  // result is bit-identical to the reference quadratic scan.
  Best best;
  for (int k = 0; k < n; ++k) {
    const int i = std::min(k, (k + n / 2) % n);
    const int j = std::max(k, (k + n / 2) % n);
    if (!filter.included(i, j)) continue;
    double sa, sb;
    double d = segment_distance(curve.seg_a(i), curve.seg_b(i), curve.seg_a(j), curve.seg_b(j), &sa, &sb);
    best.offer(d, i, j, sa, sb);
  }
  if (best.i < 0) best.dist = std::max(bbox_diagonal(curve.points), 1.0);

  // Any pair at distance <= best has midpoints within best + longest, so a
  // grid of that cell size only ever needs the 27 neighboring cells.
  const double cell = best.dist + longest;
  auto key_of = [cell](const Vec3& p) {
    return CellKey{static_cast<long long>(std::floor(p.x / cell)),
                   static_cast<long long>(std::floor(p.y / cell)),
                   static_cast<long long>(std::floor(p.z / cell))};
  };
  std::unordered_map<CellKey, std::vector<int>, CellHash> grid;
  grid.reserve(static_cast<std::size_t>(n) * 2);
  for (int i = 0; i < n; ++i) grid[key_of(mid[static_cast<std::size_t>(i)])].push_back(i);

  for (int i = 0; i < n; ++i) {
    const CellKey center = key_of(mid[static_cast<std::size_t>(i)]);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = grid.find(CellKey{center.x + dx, center.y + dy, center.z + dz});
          if (it == grid.end()) continue;
          for (int j : it->second) {
            if (j <= i) continue;
            if ((mid[static_cast<std::size_t>(j)] - mid[static_cast<std::size_t>(i)]).norm() >
                best.dist + longest)
              continue;
            if (!filter.included(i, j)) continue;
            double sa, sb;
            double d = segment_distance(curve.seg_a(i), curve.seg_b(i), curve.seg_a(j),
                                        curve.seg_b(j), &sa, &sb);
            best.offer(d, i, j, sa, sb);
          }
        }
  }

  EmbeddingReport report;
  report.chord_bound = longest;
  report.certificate_bound = curve.source ? sagitta_bound(curve) : longest;
  if (best.i >= 0) {
    report.min_clearance = best.dist;
    report.closest_segments = {best.i, best.j};
    auto param_at = [&curve](int seg, double frac) {
      double t0 = curve.seg_param_a(seg);
      double t1 = curve.seg_param_b(seg);
      double t = t0 + frac * (t1 - t0);
      return t >= curve.period ? t - curve.period : t;
    };
    report.closest_params = {param_at(best.i, best.si), param_at(best.j, best.sj)};
  } else {
    report.min_clearance = std::numeric_limits<double>::infinity();
  }
  report.embedded = report.min_clearance > 2.0 * report.certificate_bound;
  return report;
}

}  // namespace fk
