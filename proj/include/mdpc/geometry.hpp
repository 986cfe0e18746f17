#pragma once

#include <cmath>
#include <optional>
#include <variant>

namespace mdpc {

// Screen space is y-down with the origin at the top-left corner.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Axis-aligned rectangle. Containment is half-open: [x, x+w) x [y, y+h).
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
  Point center() const { return {x + w / 2, y + h / 2}; }
  bool empty() const { return w <= 0.0 || h <= 0.0; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Closed disc: (p - c).(p - c) <= r^2.
struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;

  Point center() const { return {cx, cy}; }

  friend bool operator==(const Circle&, const Circle&) = default;
};

using Shape = std::variant<Rect, Circle>;

bool valid(const Rect& r);
bool valid(const Circle& c);
bool valid(const Shape& s);

bool contains(const Rect& r, Point p);
bool contains(const Circle& c, Point p);
bool contains(const Shape& s, Point p);

Rect bounds(const Shape& s);

// Largest rect inside both, or nullopt when the overlap has zero area.
std::optional<Rect> rect_intersection(const Rect& a, const Rect& b);

// Row-major 2x3 affine map:
//   x' = a*x + b*y + e
//   y' = c*x + d*y + f
struct Affine2 {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
  double e = 0.0;
  double f = 0.0;

  static Affine2 identity() { return {}; }
  static Affine2 translate(double tx, double ty) { return {1, 0, 0, 1, tx, ty}; }
  static Affine2 scale(double sx, double sy) { return {sx, 0, 0, sy, 0, 0}; }
  static Affine2 rotate(double radians);

  double det() const { return a * d - b * c; }
  bool is_identity() const { return *this == Affine2{}; }
  Point apply(Point p) const { return {a * p.x + b * p.y + e, c * p.x + d * p.y + f}; }
  Point operator()(Point p) const { return apply(p); }

  friend bool operator==(const Affine2&, const Affine2&) = default;
};

// compose(outer, inner) maps p to outer(inner(p)).
Affine2 compose(const Affine2& outer, const Affine2& inner);

// Throws SingularTransform when |det| <= 1e-12.
Affine2 affine_invert(const Affine2& m);

inline constexpr double kSingularDet = 1e-12;

}  // namespace mdpc
