#include "mdpc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdpc {

HysteresisVerdict oracle_hysteresis(Point press, std::span<const Point> moves, double radius, double tolerance) {
  HysteresisVerdict v;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const double d = distance(press, moves[i]);
    if (std::abs(d - radius) <= tolerance) {
      v.boundary = true;
    }
    if (d > radius) {
      v.outcome = DragOutcome::Drag;
      v.dragStart = i;
      return v;
    }
  }
  return v;
}

HysteresisVerdict oracle_hysteresis(std::span<const TraceRecord> trace, double radius, double tolerance) {
  std::optional<Point> press;
  std::vector<Point> moves;
  for (const auto& r : trace) {
    if (!press) {
      if (r.type == RecordType::Press) {
        press = Point{r.x, r.y};
      }
      continue;
    }
    if (r.type == RecordType::Move) {
      moves.push_back({r.x, r.y});
    } else if (r.type == RecordType::Release) {
      // The release position counts as a final sample.
      moves.push_back({r.x, r.y});
      break;
    }
  }
  if (!press) {
    return {};
  }
  return oracle_hysteresis(*press, moves, radius, tolerance);
}

ZoneVerdict oracle_guide_zone(double cursor, std::span<const BandInterval> bands, double tolerance) {
  ZoneVerdict v;
  for (const auto& b : bands) {
    const double off = std::abs(cursor - b.center);
    if (std::abs(off - b.halfWidth) <= tolerance) {
      v.boundary = true;
    }
    if (!v.tag && off <= b.halfWidth) {
      v.tag = b.tag;
    }
  }
  return v;
}

namespace {

double segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  const double t = len2 > 0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + t * ab);
}

}  // namespace

double boundary_distance(const Shape& s, Point p) {
  if (const auto* c = std::get_if<Circle>(&s)) {
    return std::abs(distance(p, {c->cx, c->cy}) - c->r);
  }
  const auto& r = std::get<Rect>(s);
  const Point a{r.x, r.y};
  const Point b{r.right(), r.y};
  const Point c{r.right(), r.bottom()};
  const Point d{r.x, r.bottom()};
  return std::min({segment_distance(p, a, b), segment_distance(p, b, c), segment_distance(p, c, d),
                   segment_distance(p, d, a)});
}

PickId oracle_topmost(std::span<const PickObject> objects, Point p) {
  PickId best = kBackgroundId;
  double bestZ = -std::numeric_limits<double>::infinity();
  for (const auto& o : objects) {
    const Point local = o.transform.is_identity() ? p : affine_invert(o.transform)(p);
    if (contains(o.shape, local) && o.z >= bestZ) {
      best = o.id;
      bestZ = o.z;
    }
  }
  return best;
}

bool near_any_boundary(std::span<const PickObject> objects, Point p, double tolerance) {
  for (const auto& o : objects) {
    const Affine2& t = o.transform;
    const double scale = std::sqrt(std::abs(t.det()));
    const Point local = t.is_identity() ? p : affine_invert(t)(p);
    if (boundary_distance(o.shape, local) * scale <= tolerance) {
      return true;
    }
  }
  return false;
}

}  // namespace mdpc
