#include "fk/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "fk/errors.hpp"
#include "fk/io.hpp"

namespace fk {

namespace {

std::string fixed3(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  return std::string(buf, res.ptr);
}

struct FlatCurve {
  std::vector<Vec2> pts;
  std::vector<double> params;
  double period;

  int size() const { return static_cast<int>(pts.size()); }

  // Segment index containing parameter t in [0, period).
  int segment_of(double t) const {
    auto it = std::upper_bound(params.begin(), params.end(), t);
    int i = static_cast<int>(it - params.begin()) - 1;
    return i < 0 ? size() - 1 : i;
  }

  Vec2 at(double t) const {
    const int i = segment_of(t);
    const double t0 = params[static_cast<std::size_t>(i)];
    const double t1 = i + 1 < size() ? params[static_cast<std::size_t>(i + 1)] : period + params[0];
    const Vec2& a = pts[static_cast<std::size_t>(i)];
    const Vec2& b = pts[static_cast<std::size_t>((i + 1) % size())];
    const double u = t1 > t0 ? (t - t0) / (t1 - t0) : 0.0;
    return a + u * (b - a);
  }

  // Parameter reached after walking the given image-plane distance from t
  // (dir = +1 forward, -1 backward).
  double walk(double t, int dir, double distance) const {
    double remaining = distance;
    double cur = t;
    Vec2 pos = at(t);
    int seg = segment_of(t);
    for (int steps = 0; steps < size() && remaining > 0; ++steps) {
      const int next_vertex = dir > 0 ? (seg + 1) % size() : seg;
      double vertex_param = dir > 0 ? (seg + 1 < size() ? params[static_cast<std::size_t>(seg + 1)] : period)
                                    : params[static_cast<std::size_t>(seg)];
      // strict: a start exactly on a vertex hops through a zero-length leg
      if (dir > 0 && vertex_param < cur) vertex_param += period;
      if (dir < 0 && vertex_param > cur) vertex_param -= period;
      const Vec2 vp = pts[static_cast<std::size_t>(next_vertex)];
      const double leg = (vp - pos).norm();
      if (leg >= remaining) {
        const double frac = leg > 0 ? remaining / leg : 0.0;
        return cur + dir * std::fabs(vertex_param - cur) * frac;
      }
      remaining -= leg;
      cur = vertex_param;
      pos = vp;
      seg = dir > 0 ? (seg + 1) % size() : (seg + size() - 1) % size();
    }
    return cur;
  }
};

}  // namespace

std::string render_svg(const SampledCurve& curve, const ProjectionFrame& frame,
                       const LinkDiagram& diagram, int size_px) {
  curve.validate();
  const int n = curve.size();
  FlatCurve flat;
  flat.period = curve.period;
  flat.params = curve.params;
  flat.pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) flat.pts.push_back(frame.project(curve.point(i)));

  Vec2 lo = flat.pts[0], hi = flat.pts[0];
  for (const Vec2& p : flat.pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double diag = (hi - lo).norm();
  const double gap = 0.015 * diag;

  // Omitted parameter stretches of the under strand around each crossing.
  struct Interval {
    double start, end;  // start in [0,P), end possibly > P (wrap)
  };
  std::vector<Interval> omit;
  for (const Crossing& c : diagram.crossings) {
    const double back = flat.walk(c.under_param, -1, gap);
    const double fwd = flat.walk(c.under_param, +1, gap);
    double start = back;
    double end = fwd;
    while (start < 0) {
      start += flat.period;
      end += flat.period;
    }
    while (start >= flat.period) {
      start -= flat.period;
      end -= flat.period;
    }
    omit.push_back({start, end});
  }

  // Split wrapping intervals, merge overlaps, then take the complement.
  std::vector<Interval> pieces;
  for (const Interval& iv : omit) {
    if (iv.end <= flat.period) {
      pieces.push_back(iv);
    } else {
      pieces.push_back({iv.start, flat.period});
      pieces.push_back({0, iv.end - flat.period});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  std::vector<Interval> merged;
  for (const Interval& iv : pieces) {
    if (!merged.empty() && iv.start <= merged.back().end)
      merged.back().end = std::max(merged.back().end, iv.end);
    else
      merged.push_back(iv);
  }
  std::vector<Interval> keep;
  if (merged.empty()) {
    keep.push_back({0, flat.period});
  } else {
    for (std::size_t k = 0; k + 1 < merged.size(); ++k)
      keep.push_back({merged[k].end, merged[k + 1].start});
    // Wrap-around kept run from the last omit back to the first.
    keep.push_back({merged.back().end, merged.front().start + flat.period});
  }

  const double margin = 0.05 * size_px;
  const double span = std::max(std::max(hi.x - lo.x, hi.y - lo.y), 1e-30);
  const double scale = (size_px - 2 * margin) / span;
  auto map = [&](const Vec2& p) {
    return Vec2{margin + (p.x - lo.x) * scale, margin + (hi.y - p.y) * scale};
  };

  std::string d;
  const bool closed = merged.empty();
  for (const Interval& run : keep) {
    const Vec2 first = map(flat.at(run.start >= flat.period ? run.start - flat.period : run.start));
    d += "M " + fixed3(first.x) + " " + fixed3(first.y);
    if (closed) {
      for (int i = 1; i < n; ++i) {
        const Vec2 p = map(flat.pts[static_cast<std::size_t>(i)]);
        d += " L " + fixed3(p.x) + " " + fixed3(p.y);
      }
      d += " Z";
      break;
    }
    // Interior sample points strictly inside (run.start, run.end).
    int i = (flat.segment_of(run.start >= flat.period ? run.start - flat.period : run.start) + 1) % n;
    double t = flat.params[static_cast<std::size_t>(i)];
    while (t <= run.start) t += flat.period;
    while (t < run.end) {
      const Vec2 p = map(flat.pts[static_cast<std::size_t>(i)]);
      d += " L " + fixed3(p.x) + " " + fixed3(p.y);
      i = (i + 1) % n;
      double tn = flat.params[static_cast<std::size_t>(i)];
      while (tn <= t) tn += flat.period;
      t = tn;
    }
    const double end_t = run.end >= flat.period ? run.end - flat.period : run.end;
    const Vec2 last = map(flat.at(end_t));
    d += " L " + fixed3(last.x) + " " + fixed3(last.y);
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size_px) +
         "\" height=\"" + std::to_string(size_px) + "\" viewBox=\"0 0 " + std::to_string(size_px) +
         " " + std::to_string(size_px) + "\">\n";
  svg += "  <desc>" + (curve.source ? curve.source->name : std::string("curve")) + " | " +
         frame_text(frame) + " | crossings=" + std::to_string(diagram.crossing_count()) +
         "</desc>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
         "stroke-linecap=\"round\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace fk
