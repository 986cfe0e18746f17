#include "mdpc/geometry.hpp"

#include <algorithm>

#include "mdpc/errors.hpp"

namespace mdpc {

bool valid(const Rect& r) {
  return std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.w) && std::isfinite(r.h) &&
         r.w >= 0.0 && r.h >= 0.0;
}

bool valid(const Circle& c) {
  return std::isfinite(c.cx) && std::isfinite(c.cy) && std::isfinite(c.r) && c.r >= 0.0;
}

bool valid(const Shape& s) {
  return std::visit([](const auto& v) { return valid(v); }, s);
}

bool contains(const Rect& r, Point p) {
  return r.x <= p.x && p.x < r.x + r.w && r.y <= p.y && p.y < r.y + r.h;
}

bool contains(const Circle& c, Point p) {
  const double dx = p.x - c.cx;
  const double dy = p.y - c.cy;
  return dx * dx + dy * dy <= c.r * c.r;
}

bool contains(const Shape& s, Point p) {
  return std::visit([p](const auto& v) { return contains(v, p); }, s);
}

Rect bounds(const Shape& s) {
  if (const auto* c = std::get_if<Circle>(&s)) {
    return {c->cx - c->r, c->cy - c->r, 2 * c->r, 2 * c->r};
  }
  return std::get<Rect>(s);
}

std::optional<Rect> rect_intersection(const Rect& a, const Rect& b) {
  const double x0 = std::max(a.x, b.x);
  const double y0 = std::max(a.y, b.y);
  const double x1 = std::min(a.right(), b.right());
  const double y1 = std::min(a.bottom(), b.bottom());
  if (x1 <= x0 || y1 <= y0) {
    return std::nullopt;
  }
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

Affine2 Affine2::rotate(double radians) {
  const double cs = std::cos(radians);
  const double sn = std::sin(radians);
  return {cs, -sn, sn, cs, 0.0, 0.0};
}

Affine2 compose(const Affine2& m, const Affine2& n) {
  return {
      m.a * n.a + m.b * n.c,
      m.a * n.b + m.b * n.d,
      m.c * n.a + m.d * n.c,
      m.c * n.b + m.d * n.d,
      m.a * n.e + m.b * n.f + m.e,
      m.c * n.e + m.d * n.f + m.f,
  };
}

Affine2 affine_invert(const Affine2& m) {
  const double det = m.det();
  if (!(std::abs(det) > kSingularDet)) {
    throw SingularTransform("affine transform is singular (det=" + std::to_string(det) + ")");
  }
  const double inv = 1.0 / det;
  Affine2 r;
  r.a = m.d * inv;
  r.b = -m.b * inv;
  r.c = -m.c * inv;
  r.d = m.a * inv;
  r.e = -(r.a * m.e + r.b * m.f);
  r.f = -(r.c * m.e + r.d * m.f);
  return r;
}

}  // namespace mdpc
