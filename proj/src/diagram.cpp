#include "fk/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>

#include "fk/errors.hpp"

namespace fk {

// ---------------------------------------------------------------------------
// LinkDiagram basics
// ---------------------------------------------------------------------------

const Crossing& LinkDiagram::crossing(int id) const {
  for (const Crossing& c : crossings)
    if (c.id == id) return c;
  raise(Err::UnknownCrossing, "no crossing with id " + std::to_string(id));
}

Crossing& LinkDiagram::crossing_mut(int id) {
  for (Crossing& c : crossings)
    if (c.id == id) return c;
  raise(Err::UnknownCrossing, "no crossing with id " + std::to_string(id));
}

std::pair<LinkDiagram::VisitRef, LinkDiagram::VisitRef> LinkDiagram::find_visits(int id) const {
  VisitRef over, under;
  for (int c = 0; c < component_count(); ++c) {
    const auto& comp = components[static_cast<std::size_t>(c)];
    for (int k = 0; k < static_cast<int>(comp.size()); ++k) {
      const Visit& v = comp[static_cast<std::size_t>(k)];
      if (v.crossing != id) continue;
      (v.over ? over : under) = {c, k};
    }
  }
  if (over.component < 0 || under.component < 0)
    raise(Err::UnknownCrossing, "crossing " + std::to_string(id) + " not visited twice");
  return {over, under};
}

std::pair<int, int> LinkDiagram::crossing_components(int id) const {
  auto [over, under] = find_visits(id);
  return {over.component, under.component};
}

void LinkDiagram::validate() const {
  std::map<int, std::pair<int, int>> counts;  // id -> (over count, under count)
  for (const auto& comp : components) {
    for (std::size_t k = 0; k < comp.size(); ++k) {
      if (k + 1 < comp.size())
        require(comp[k].param < comp[k + 1].param, Err::Internal, "visit params out of order");
      auto& c = counts[comp[k].crossing];
      (comp[k].over ? c.first : c.second) += 1;
    }
  }
  require(counts.size() == crossings.size(), Err::Internal, "crossing/visit mismatch");
  for (const Crossing& c : crossings) {
    require(c.sign == 1 || c.sign == -1, Err::Internal, "bad crossing sign");
    auto it = counts.find(c.id);
    require(it != counts.end() && it->second == std::pair<int, int>(1, 1), Err::Internal,
            "crossing not visited exactly once over and once under");
  }
  for (std::size_t i = 1; i < crossings.size(); ++i)
    require(crossings[i - 1].id < crossings[i].id, Err::Internal, "crossing ids out of order");
}

std::string LinkDiagram::gauss_code() const {
  std::string out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c > 0) out += ";";
    bool first = true;
    for (const Visit& v : components[c]) {
      if (!first) out += ",";
      first = false;
      out += v.over ? "O" : "U";
      out += std::to_string(crossing(v.crossing).sign * (v.crossing + 1));
    }
  }
  return out;
}

std::string LinkDiagram::pd_code() const {
  // Arc entering visit k of a component with base offset b and length L is
  // b + k (1-based, wrapping to b + L for k = 0); the outgoing arc is b+k+1.
  struct ArcPair {
    long long in = 0, out = 0;
  };
  std::unordered_map<std::int64_t, ArcPair> arcs_at;  // key: crossing*2 + over
  long long base = 0;
  for (const auto& comp : components) {
    const long long len = static_cast<long long>(comp.size());
    for (long long k = 0; k < len; ++k) {
      const Visit& v = comp[static_cast<std::size_t>(k)];
      ArcPair& a = arcs_at[static_cast<std::int64_t>(v.crossing) * 2 + (v.over ? 1 : 0)];
      a.in = base + (k == 0 ? len : k);
      a.out = base + k + 1;
    }
    base += len;
  }
  std::string out;
  for (const Crossing& c : crossings) {
    const ArcPair over = arcs_at[static_cast<std::int64_t>(c.id) * 2 + 1];
    const ArcPair under = arcs_at[static_cast<std::int64_t>(c.id) * 2 + 0];
    // Counterclockwise from the incoming under strand; positive crossings
    // carry the over strand from slot d to slot b.
    long long b = c.sign > 0 ? over.out : over.in;
    long long d = c.sign > 0 ? over.in : over.out;
    if (!out.empty()) out += " ";
    out += "X[" + std::to_string(under.in) + "," + std::to_string(b) + "," +
           std::to_string(under.out) + "," + std::to_string(d) + "]";
  }
  return out;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const Crossing& c : d.crossings) w += c.sign;
  return w;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing_id) {
  LinkDiagram out = d;
  Crossing& c = out.crossing_mut(crossing_id);
  std::swap(c.over_param, c.under_param);
  c.sign = -c.sign;
  auto [over, under] = out.find_visits(crossing_id);
  out.components[static_cast<std::size_t>(over.component)][static_cast<std::size_t>(over.index)]
      .over = false;
  out.components[static_cast<std::size_t>(under.component)][static_cast<std::size_t>(under.index)]
      .over = true;
  return out;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing_id) {
  require(d.component_count() == 1, Err::NotAKnot, "smoothing needs a knot diagram");
  d.crossing(crossing_id);  // UnknownCrossing check
  const auto& visits = d.components[0];
  int i = -1, j = -1;
  for (int k = 0; k < static_cast<int>(visits.size()); ++k) {
    if (visits[static_cast<std::size_t>(k)].crossing != crossing_id) continue;
    (i < 0 ? i : j) = k;
  }
  require(i >= 0 && j >= 0, Err::Internal, "crossing not visited twice");

  LinkDiagram out;
  out.has_geometry = d.has_geometry;
  out.components.resize(2);
  // Oriented reconnection: the strand arriving at the first passage leaves
  // along the second passage's outgoing arc, splitting the cycle into the two
  // stretches between the passages.
  auto& keep = out.components[0];
  for (int k = 0; k < i; ++k) keep.push_back(visits[static_cast<std::size_t>(k)]);
  for (int k = j + 1; k < static_cast<int>(visits.size()); ++k)
    keep.push_back(visits[static_cast<std::size_t>(k)]);
  auto& split = out.components[1];
  for (int k = i + 1; k < j; ++k) split.push_back(visits[static_cast<std::size_t>(k)]);

  for (const Crossing& c : d.crossings)
    if (c.id != crossing_id) out.crossings.push_back(c);
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// PD code parsing
// ---------------------------------------------------------------------------

LinkDiagram diagram_from_pd(const std::string& text) {
  struct Entry {
    long long a, b, c, d;
  };
  std::vector<Entry> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == 'X') {
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size() || text[pos] != '[') raise(Err::MalformedPD, "expected '[' after X");
      ++pos;
      long long vals[4];
      for (int k = 0; k < 4; ++k) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
          ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          raise(Err::MalformedPD, "expected arc label");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          v = v * 10 + (text[pos++] - '0');
        vals[k] = v;
      }
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size() || text[pos] != ']') raise(Err::MalformedPD, "expected ']'");
      ++pos;
      entries.push_back({vals[0], vals[1], vals[2], vals[3]});
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
    } else {
      raise(Err::MalformedPD, std::string("unexpected character '") + ch + "'");
    }
  }

  LinkDiagram out;
  if (entries.empty()) {
    out.components.push_back({});  // 0-crossing unknot
    return out;
  }

  const long long m = static_cast<long long>(entries.size());
  const long long arcs = 2 * m;
  std::vector<int> seen(static_cast<std::size_t>(arcs) + 1, 0);
  for (const Entry& e : entries)
    for (long long v : {e.a, e.b, e.c, e.d}) {
      if (v < 1 || v > arcs) raise(Err::InconsistentArcs, "arc label out of range");
      seen[static_cast<std::size_t>(v)] += 1;
    }
  for (long long v = 1; v <= arcs; ++v)
    if (seen[static_cast<std::size_t>(v)] != 2)
      raise(Err::InconsistentArcs, "arc " + std::to_string(v) + " not used exactly twice");

  auto next_arc = [arcs](long long x) { return x % arcs + 1; };

  // successor[a]: arc following a; visit_of[a]: passage terminating arc a.
  std::vector<long long> successor(static_cast<std::size_t>(arcs) + 1, 0);
  struct End {
    int crossing = -1;
    bool over = false;
  };
  std::vector<End> end_of(static_cast<std::size_t>(arcs) + 1);
  std::vector<int> signs(entries.size(), 0);

  auto assign = [&](long long from, long long to, int crossing, bool over) {
    if (successor[static_cast<std::size_t>(from)] != 0 || end_of[static_cast<std::size_t>(from)].crossing >= 0)
      raise(Err::InconsistentArcs, "arc " + std::to_string(from) + " has two successors");
    successor[static_cast<std::size_t>(from)] = to;
    end_of[static_cast<std::size_t>(from)] = {crossing, over};
  };

  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    assign(e.a, e.c, static_cast<int>(k), false);
    if (e.b == next_arc(e.d)) {
      signs[k] = +1;  // over strand runs d -> b
      assign(e.d, e.b, static_cast<int>(k), true);
    } else if (e.d == next_arc(e.b)) {
      signs[k] = -1;  // over strand runs b -> d
      assign(e.b, e.d, static_cast<int>(k), true);
    } else {
      raise(Err::InconsistentArcs, "over strand arcs not consecutive");
    }
  }
  for (long long v = 1; v <= arcs; ++v)
    if (successor[static_cast<std::size_t>(v)] == 0)
      raise(Err::InconsistentArcs, "arc " + std::to_string(v) + " has no successor");

  // Components are the cycles of the successor map; each starts at its
  // smallest arc for determinism.
  std::vector<bool> used(static_cast<std::size_t>(arcs) + 1, false);
  double param = 0;
  for (long long start = 1; start <= arcs; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<Visit> comp;
    long long a = start;
    do {
      used[static_cast<std::size_t>(a)] = true;
      const End& e = end_of[static_cast<std::size_t>(a)];
      comp.push_back({e.crossing, e.over, param});
      param += 1;
      a = successor[static_cast<std::size_t>(a)];
    } while (a != start);
    out.components.push_back(std::move(comp));
  }

  for (std::size_t k = 0; k < entries.size(); ++k)
    out.crossings.push_back({static_cast<int>(k), signs[k], 0, 0, Vec2{}});
  for (auto& comp : out.components)
    for (const Visit& v : comp) {
      Crossing& c = out.crossings[static_cast<std::size_t>(v.crossing)];
      (v.over ? c.over_param : c.under_param) = v.param;
    }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Diagram extraction from a projected curve
// ---------------------------------------------------------------------------

namespace {

struct RawCrossing {
  int seg_a = 0, seg_b = 0;    // originating segments, seg_a < seg_b
  double ta = 0, tb = 0;       // refined curve parameters
  Vec2 pos{};                  // image-plane location
  Vec2 tan_a{}, tan_b{};       // image-plane tangents of the two strands
  double ha = 0, hb = 0;       // heights along the viewing axis
};

// Proper intersection of [p0,p1] and [q0,q1] with parameters in [0,1); fills
// s and t on success.
bool segment_intersection(const Vec2& p0, const Vec2& p1, const Vec2& q0, const Vec2& q1,
                          double* s_out, double* t_out, double slack = 0.0) {
  const Vec2 dp = p1 - p0;
  const Vec2 dq = q1 - q0;
  const double denom = cross(dp, dq);
  const double scale = dp.norm() * dq.norm();
  if (std::fabs(denom) <= 1e-14 * scale) return false;
  const Vec2 w = q0 - p0;
  const double s = cross(w, dq) / denom;
  const double t = cross(w, dp) / denom;
  if (s < -slack || t < -slack) return false;
  if (slack == 0.0) {
    if (s >= 1.0 || t >= 1.0) return false;
  } else {
    if (s > 1.0 + slack || t > 1.0 + slack) return false;
  }
  if (s_out) *s_out = s;
  if (t_out) *t_out = t;
  return true;
}

double min_dist_2d(const Vec2& p0, const Vec2& p1, const Vec2& q0, const Vec2& q1) {
  auto point_seg = [](const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    const double n2 = dot(d, d);
    double u = n2 > 0 ? std::clamp(dot(p - a, d) / n2, 0.0, 1.0) : 0.0;
    return (p - (a + u * d)).norm();
  };
  double s, t;
  if (segment_intersection(p0, p1, q0, q1, &s, &t, 1e-12)) return 0.0;
  return std::min(std::min(point_seg(p0, q0, q1), point_seg(p1, q0, q1)),
                  std::min(point_seg(q0, p0, p1), point_seg(q1, p0, p1)));
}

double wrap_param(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0) r += period;
  return r;
}

double cyclic_gap(double a, double b, double period) {
  double d = std::fabs(a - b);
  return std::min(d, period - d);
}

// Locates the exact image-plane intersection of strands near segments i and j
// by interval halving on the smooth curve followed by a Newton polish.
void refine_on_curve(const FourierKnot& knot, const FourierSeries dx[3], const ProjectionFrame& frame,
                     double a0, double a1, double b0, double b1, double* ta, double* tb) {
  auto img = [&](double t) { return frame.project(knot.point(t)); };
  auto img_tangent = [&](double t) {
    Vec3 vel{dx[0].evaluate(t), dx[1].evaluate(t), dx[2].evaluate(t)};
    return frame.project(vel);
  };

  const double lo_a = a0 - (a1 - a0), hi_a = a1 + (a1 - a0);
  const double lo_b = b0 - (b1 - b0), hi_b = b1 + (b1 - b0);

  Vec2 A0 = img(a0), A1 = img(a1), B0 = img(b0), B1 = img(b1);
  for (int iter = 0; iter < 64 && (a1 - a0 > 1e-9 || b1 - b0 > 1e-9); ++iter) {
    const double am = 0.5 * (a0 + a1), bm = 0.5 * (b0 + b1);
    const Vec2 Am = img(am), Bm = img(bm);
    struct Half {
      double lo, hi;
      Vec2 plo, phi;
    };
    const Half ah[2] = {{a0, am, A0, Am}, {am, a1, Am, A1}};
    const Half bh[2] = {{b0, bm, B0, Bm}, {bm, b1, Bm, B1}};
    bool found = false;
    for (int u = 0; u < 2 && !found; ++u)
      for (int w = 0; w < 2 && !found; ++w) {
        if (!segment_intersection(ah[u].plo, ah[u].phi, bh[w].plo, bh[w].phi, nullptr, nullptr, 1e-9))
          continue;
        a0 = ah[u].lo;
        a1 = ah[u].hi;
        A0 = ah[u].plo;
        A1 = ah[u].phi;
        b0 = bh[w].lo;
        b1 = bh[w].hi;
        B0 = bh[w].plo;
        B1 = bh[w].phi;
        found = true;
      }
    if (!found) break;
  }

  double a = 0.5 * (a0 + a1), b = 0.5 * (b0 + b1);
  for (int iter = 0; iter < 40; ++iter) {
    const Vec2 f = img(a) - img(b);
    const Vec2 ja = img_tangent(a);
    const Vec2 jb = -1.0 * img_tangent(b);
    const double det = ja.x * jb.y - jb.x * ja.y;
    if (std::fabs(det) < 1e-300) break;
    const double da = (f.x * jb.y - jb.x * f.y) / det;
    const double db = (ja.x * f.y - f.x * ja.y) / det;
    a -= da;
    b -= db;
    if (a < lo_a || a > hi_a || b < lo_b || b > hi_b) {
      // left the bracket: fall back to the halved interval midpoints
      a = 0.5 * (a0 + a1);
      b = 0.5 * (b0 + b1);
      break;
    }
    if (std::fabs(da) < 1e-13 && std::fabs(db) < 1e-13) break;
  }
  *ta = a;
  *tb = b;
}

struct Grid2 {
  double cell = 1;
  std::unordered_map<std::int64_t, std::vector<int>> cells;

  static std::int64_t key(long long cx, long long cy) {
    return (cx << 32) ^ (cy & 0xffffffffll);
  }
  void insert(const Vec2& lo, const Vec2& hi, int idx) {
    for (long long cx = static_cast<long long>(std::floor(lo.x / cell));
         cx <= static_cast<long long>(std::floor(hi.x / cell)); ++cx)
      for (long long cy = static_cast<long long>(std::floor(lo.y / cell));
           cy <= static_cast<long long>(std::floor(hi.y / cell)); ++cy)
        cells[key(cx, cy)].push_back(idx);
  }
};

}  // namespace

LinkDiagram extract_diagram(const SampledCurve& curve, const ProjectionFrame& frame) {
  curve.validate();
  frame.validate();
  const int n = curve.size();
  const double period = curve.period;

  std::vector<Vec2> img(static_cast<std::size_t>(n));
  std::vector<double> height(static_cast<std::size_t>(n));
  Vec2 lo2{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi2{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < n; ++i) {
    img[static_cast<std::size_t>(i)] = frame.project(curve.point(i));
    height[static_cast<std::size_t>(i)] = frame.height(curve.point(i));
    lo2 = {std::min(lo2.x, img[static_cast<std::size_t>(i)].x), std::min(lo2.y, img[static_cast<std::size_t>(i)].y)};
    hi2 = {std::max(hi2.x, img[static_cast<std::size_t>(i)].x), std::max(hi2.y, img[static_cast<std::size_t>(i)].y)};
  }
  const double diam3 = bbox_diagonal(curve.points);
  const double diam2 = (hi2 - lo2).norm();
  const double height_tol = 1e-7 * diam3;
  const double sep_tol = 1e-7 * diam2;
  const double sin_tol = 1e-4;

  auto img_a = [&](int i) { return img[static_cast<std::size_t>(i)]; };
  auto img_b = [&](int i) { return img[static_cast<std::size_t>((i + 1) % n)]; };

  // Chords track the smooth curve to within the sagitta bound; image pairs
  // closer than r_miss that fail to intersect could hide a true crossing and
  // are treated as near-tangencies unless they sit beside a found crossing.
  double r_miss = 0;
  FourierSeries deriv[3];
  if (curve.source) {
    double dt_max = 0;
    for (int i = 0; i < n; ++i) dt_max = std::max(dt_max, curve.seg_param_b(i) - curve.seg_param_a(i));
    r_miss = 0.5 * acceleration_bound(*curve.source) * dt_max * dt_max;
    deriv[0] = curve.source->x.derivative();
    deriv[1] = curve.source->y.derivative();
    deriv[2] = curve.source->z.derivative();
  }

  double max_len2 = 0;
  for (int i = 0; i < n; ++i) max_len2 = std::max(max_len2, (img_b(i) - img_a(i)).norm());
  Grid2 grid;
  grid.cell = std::max(max_len2 + 2 * r_miss, 1e-12);
  for (int i = 0; i < n; ++i) {
    const Vec2 a = img_a(i), b = img_b(i);
    const Vec2 lo{std::min(a.x, b.x) - r_miss, std::min(a.y, b.y) - r_miss};
    const Vec2 hi{std::max(a.x, b.x) + r_miss, std::max(a.y, b.y) + r_miss};
    grid.insert(lo, hi, i);
  }

  std::vector<std::pair<int, int>> candidates;
  for (const auto& [key, segs] : grid.cells) {
    (void)key;
    for (std::size_t u = 0; u < segs.size(); ++u)
      for (std::size_t w = u + 1; w < segs.size(); ++w) {
        int i = std::min(segs[u], segs[w]);
        int j = std::max(segs[u], segs[w]);
        int gap = std::min(j - i, n - (j - i));
        if (gap <= 1) continue;  // same or vertex-sharing segments
        candidates.emplace_back(i, j);
      }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<RawCrossing> raw;
  std::vector<std::pair<int, int>> near_misses;
  for (const auto& [i, j] : candidates) {
    double s, t;
    if (!segment_intersection(img_a(i), img_b(i), img_a(j), img_b(j), &s, &t)) {
      if (r_miss > 0 && min_dist_2d(img_a(i), img_b(i), img_a(j), img_b(j)) < r_miss)
        near_misses.emplace_back(i, j);
      continue;
    }
    RawCrossing rc;
    rc.seg_a = i;
    rc.seg_b = j;
    if (curve.source) {
      refine_on_curve(*curve.source, deriv, frame, curve.seg_param_a(i), curve.seg_param_b(i),
                      curve.seg_param_a(j), curve.seg_param_b(j), &rc.ta, &rc.tb);
      const Vec3 pa = curve.source->point(rc.ta);
      const Vec3 pb = curve.source->point(rc.tb);
      rc.pos = 0.5 * (frame.project(pa) + frame.project(pb));
      rc.ha = frame.height(pa);
      rc.hb = frame.height(pb);
      rc.tan_a = frame.project(Vec3{deriv[0].evaluate(rc.ta), deriv[1].evaluate(rc.ta), deriv[2].evaluate(rc.ta)});
      rc.tan_b = frame.project(Vec3{deriv[0].evaluate(rc.tb), deriv[1].evaluate(rc.tb), deriv[2].evaluate(rc.tb)});
      rc.ta = wrap_param(rc.ta, period);
      rc.tb = wrap_param(rc.tb, period);
    } else {
      rc.ta = curve.seg_param_a(i) + s * (curve.seg_param_b(i) - curve.seg_param_a(i));
      rc.tb = curve.seg_param_a(j) + t * (curve.seg_param_b(j) - curve.seg_param_a(j));
      rc.ta = wrap_param(rc.ta, period);
      rc.tb = wrap_param(rc.tb, period);
      rc.pos = img_a(i) + s * (img_b(i) - img_a(i));
      const double hi_a = height[static_cast<std::size_t>(i)];
      const double hi_b = height[static_cast<std::size_t>((i + 1) % n)];
      const double hj_a = height[static_cast<std::size_t>(j)];
      const double hj_b = height[static_cast<std::size_t>((j + 1) % n)];
      rc.ha = hi_a + s * (hi_b - hi_a);
      rc.hb = hj_a + t * (hj_b - hj_a);
      rc.tan_a = img_b(i) - img_a(i);
      rc.tan_b = img_b(j) - img_a(j);
    }
    raw.push_back(rc);
  }

  // Refinement can pull two polyline hits onto one smooth crossing.
  std::vector<RawCrossing> unique_raw;
  const double dup_tol = 1e-7 * period;
  for (const RawCrossing& rc : raw) {
    bool dup = false;
    for (const RawCrossing& kept : unique_raw) {
      const bool same = cyclic_gap(rc.ta, kept.ta, period) < dup_tol &&
                        cyclic_gap(rc.tb, kept.tb, period) < dup_tol;
      const bool swapped = cyclic_gap(rc.ta, kept.tb, period) < dup_tol &&
                           cyclic_gap(rc.tb, kept.ta, period) < dup_tol;
      if (same || swapped) {
        dup = true;
        break;
      }
    }
    if (!dup) unique_raw.push_back(rc);
  }

  for (const auto& [i, j] : near_misses) {
    bool beside_crossing = false;
    for (const RawCrossing& rc : unique_raw) {
      auto seg_gap = [n](int a, int b) {
        int d = std::abs(a - b);
        return std::min(d, n - d);
      };
      if ((seg_gap(i, rc.seg_a) <= 2 && seg_gap(j, rc.seg_b) <= 2) ||
          (seg_gap(i, rc.seg_b) <= 2 && seg_gap(j, rc.seg_a) <= 2)) {
        beside_crossing = true;
        break;
      }
    }
    if (!beside_crossing)
      raise(Err::NonGenericProjection,
            "strands pass within the discretization radius without crossing near segments " +
                std::to_string(i) + "," + std::to_string(j));
  }

  for (const RawCrossing& rc : unique_raw) {
    if (std::fabs(rc.ha - rc.hb) < height_tol)
      raise(Err::NonGenericProjection, "crossing heights nearly equal");
    const double denom = rc.tan_a.norm() * rc.tan_b.norm();
    if (denom <= 0 || std::fabs(cross(rc.tan_a, rc.tan_b)) / denom < sin_tol)
      raise(Err::NonGenericProjection, "near-tangent crossing");
  }
  for (std::size_t u = 0; u < unique_raw.size(); ++u)
    for (std::size_t w = u + 1; w < unique_raw.size(); ++w)
      if ((unique_raw[u].pos - unique_raw[w].pos).norm() < sep_tol)
        raise(Err::NonGenericProjection, "two crossings nearly coincide (triple point)");

  // Assemble: ids ordered by first passage, visits ordered by parameter.
  std::sort(unique_raw.begin(), unique_raw.end(), [](const RawCrossing& a, const RawCrossing& b) {
    return std::min(a.ta, a.tb) < std::min(b.ta, b.tb);
  });

  LinkDiagram out;
  out.has_geometry = true;
  std::vector<Visit> visits;
  for (std::size_t k = 0; k < unique_raw.size(); ++k) {
    const RawCrossing& rc = unique_raw[k];
    const bool a_over = rc.ha > rc.hb;
    const Vec2 tan_over = a_over ? rc.tan_a : rc.tan_b;
    const Vec2 tan_under = a_over ? rc.tan_b : rc.tan_a;
    Crossing c;
    c.id = static_cast<int>(k);
    c.sign = cross(tan_over, tan_under) > 0 ? +1 : -1;
    c.over_param = a_over ? rc.ta : rc.tb;
    c.under_param = a_over ? rc.tb : rc.ta;
    c.position = rc.pos;
    out.crossings.push_back(c);
    visits.push_back({c.id, true, c.over_param});
    visits.push_back({c.id, false, c.under_param});
  }
  std::sort(visits.begin(), visits.end(), [](const Visit& a, const Visit& b) { return a.param < b.param; });
  out.components.push_back(std::move(visits));
  out.validate();
  return out;
}

LinkDiagram extract_mirror_diagram(const SampledCurve& curve, const ProjectionFrame& frame) {
  // The right-handed opposite frame sees the image reflected across the u=v
  // diagonal; undoing that reflection recovers the left-handed view, which
  // negates every tangent cross product and hence every sign.
  LinkDiagram d = extract_diagram(curve, frame.mirrored());
  for (Crossing& c : d.crossings) {
    c.sign = -c.sign;
    std::swap(c.position.x, c.position.y);
  }
  return d;
}

}  // namespace fk
