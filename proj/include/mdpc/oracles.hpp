#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdpc/geometry.hpp"
#include "mdpc/harness.hpp"
#include "mdpc/picking.hpp"

namespace mdpc {

// Analytical counterparts of the picking-based interactions. None of these
// touch pick buffers or state machines.

enum class DragOutcome { Select, Drag };

struct HysteresisVerdict {
  DragOutcome outcome = DragOutcome::Select;
  std::optional<std::size_t> dragStart;  // index of the first move beyond r
  // Some move up to the deciding one lies within `tolerance` of the circle.
  bool boundary = false;
};

// Euclidean distance from the press point at every move.
HysteresisVerdict oracle_hysteresis(Point press, std::span<const Point> moves, double radius,
                                    double tolerance = 1.0);
// Uses the first press of the trace and the moves up to the next release.
HysteresisVerdict oracle_hysteresis(std::span<const TraceRecord> trace, double radius, double tolerance = 1.0);

struct BandInterval {
  std::string tag;
  double center = 0.0;
  double halfWidth = 0.0;
};

struct ZoneVerdict {
  std::optional<std::string> tag;  // first band in list order with |c - center| <= halfWidth
  bool boundary = false;           // c lies within tolerance of some band edge
};

ZoneVerdict oracle_guide_zone(double cursor, std::span<const BandInterval> bands, double tolerance = 1.0);

// Distance from p to the outline of the shape.
double boundary_distance(const Shape& s, Point p);

// Topmost object whose shape (through its transform) contains p: highest z,
// later in the list on ties. Returns the object's id or 0.
PickId oracle_topmost(std::span<const PickObject> objects, Point p);

// True when p is within `tolerance` of the outline of any object; transforms
// are assumed to be rigid or uniformly scaling.
bool near_any_boundary(std::span<const PickObject> objects, Point p, double tolerance = 1.0);

}  // namespace mdpc
