#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fk/projection.hpp"
#include "fk/sampling.hpp"
#include "fk/vec.hpp"

namespace fk {

// One transverse double point of the projected curve. over_param/under_param
// are curve parameters of the two strands; sign follows the right-hand rule:
// +1 when the under tangent is a counterclockwise rotation (by less than pi)
// of the over tangent in the image plane.
struct Crossing {
  int id = 0;
  int sign = +1;
  double over_param = 0;
  double under_param = 0;
  Vec2 position{};

  friend bool operator==(const Crossing& a, const Crossing& b) {
    return a.id == b.id && a.sign == b.sign && a.over_param == b.over_param &&
           a.under_param == b.under_param && a.position.x == b.position.x &&
           a.position.y == b.position.y;
  }
};

// One passage of a strand through a crossing.
struct Visit {
  int crossing = 0;
  bool over = false;
  double param = 0;  // traversal position within the component

  friend bool operator==(const Visit& a, const Visit& b) {
    return a.crossing == b.crossing && a.over == b.over && a.param == b.param;
  }
};

// Combinatorial link diagram: per-component cyclic visit sequences plus one
// record per crossing. Geometric fields are populated by extract_diagram and
// absent for diagrams rebuilt from codes.
struct LinkDiagram {
  std::vector<Crossing> crossings;               // sorted by id
  std::vector<std::vector<Visit>> components;    // visits in traversal order
  bool has_geometry = false;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(components.size()); }

  const Crossing& crossing(int id) const;  // throws UnknownCrossing
  Crossing& crossing_mut(int id);

  // (component, index) of the over and under visits of a crossing.
  struct VisitRef {
    int component = -1;
    int index = -1;
  };
  std::pair<VisitRef, VisitRef> find_visits(int id) const;  // {over, under}

  // Components the crossing touches: {component of over, component of under}.
  std::pair<int, int> crossing_components(int id) const;

  void validate() const;

  // "O<k>"/"U<k>" tokens in traversal order, k signed by the crossing sign,
  // comma separated; components joined with ";".
  std::string gauss_code() const;

  // "X[a,b,c,d]" per crossing, arcs numbered along the traversal, entries in
  // crossing id order, space separated.
  std::string pd_code() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings == b.crossings && a.components == b.components;
  }
};

int writhe(const LinkDiagram& d);

// Exchanges over/under at one crossing and negates its sign.
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing_id);

// Oriented smoothing of a self-crossing of a knot diagram: the crossing is
// removed and the single component splits into exactly two.
LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing_id);

// Rebuilds a combinatorial diagram from PD code text ("X[a,b,c,d]" entries,
// arcs numbered consecutively along the knot).
LinkDiagram diagram_from_pd(const std::string& text);

// Projects the curve along the frame and assembles the diagram from all
// transverse self-intersections of the image. Crossing locations are refined
// against the smooth source curve when the sampling carries one. Throws
// NonGenericProjection on height-degenerate, near-tangent or near-triple
// configurations.
LinkDiagram extract_diagram(const SampledCurve& curve, const ProjectionFrame& frame);

// The diagram seen against the frame direction with the image plane kept in
// place (the left-handed view): over and under swap at every crossing and
// every sign negates. Computed as the in-plane reflection of the extraction
// through the right-handed opposite frame.
LinkDiagram extract_mirror_diagram(const SampledCurve& curve, const ProjectionFrame& frame);

}  // namespace fk
