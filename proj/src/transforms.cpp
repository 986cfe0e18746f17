#include "mdpc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdpc/errors.hpp"

namespace mdpc {

namespace {

// Largest representable day fraction that invtransf will produce.
constexpr double kMaxFrac = 1.0 - 1e-12;
constexpr double kColumnEdgeEps = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

WrapResult wrap(double t) {
  double week = std::floor(t / kMinutesPerWeek);
  double rem = t - week * kMinutesPerWeek;
  // floor(t / WEEK) can be off by one ulp for t just below a week boundary.
  if (rem < 0.0) {
    week -= 1.0;
    rem += kMinutesPerWeek;
  } else if (rem >= kMinutesPerWeek) {
    week += 1.0;
    rem -= kMinutesPerWeek;
  }
  int day = static_cast<int>(std::floor(rem / kMinutesPerDay));
  day = std::clamp(day, 0, kDaysPerWeek - 1);
  double frac = (rem - day * kMinutesPerDay) / kMinutesPerDay;
  if (frac >= 1.0) {
    frac = std::nextafter(1.0, 0.0);
  } else if (frac < 0.0) {
    frac = 0.0;
  }
  return {static_cast<std::int64_t>(week), day, frac};
}

double invwrap(const WrapResult& w) {
  return week_start(w.week) + w.day * kMinutesPerDay + w.frac * kMinutesPerDay;
}

ViewParams ViewParams::for_window(double w, double h) {
  ViewParams v;
  v.resize(w, h);
  return v;
}

void ViewParams::resize(double w, double h) {
  windowW = w;
  windowH = h;
  cellWidth = w / kDaysPerWeek;
  cellHeight = h;
}

Point transf(double t, const ViewParams& view) {
  const WrapResult w = wrap(t);
  if (w.week != view.currentWeek) {
    throw WrongWeek("time " + std::to_string(t) + " is in week " + std::to_string(w.week) +
                    ", view shows week " + std::to_string(view.currentWeek));
  }
  const Point cell{w.day * view.cellWidth, w.frac * view.cellHeight};
  return {view.zoom * cell.x + view.panX, view.zoom * cell.y + view.panY};
}

double invtransf(Point p, const ViewParams& view) {
  if (!(view.zoom > 0.0)) {
    throw SingularTransform("view zoom must be positive");
  }
  const Point q{(p.x - view.panX) / view.zoom, (p.y - view.panY) / view.zoom};
  // Column edges absorb the rounding of the pan/zoom inverse.
  const double u = q.x / view.cellWidth;
  const double nearest = std::round(u);
  const double column = std::abs(u - nearest) <= kColumnEdgeEps ? nearest : std::floor(u);
  const int day = static_cast<int>(std::clamp(column, 0.0, double(kDaysPerWeek - 1)));
  const double frac = std::clamp(q.y / view.cellHeight, 0.0, kMaxFrac);
  return invwrap({view.currentWeek, day, frac});
}

Point apply_stage(const PlaneStage& stage, Point p) {
  return std::visit(
      Overloaded{
          [p](const ScaleStage& s) { return Point{s.sx * p.x, s.sy * p.y}; },
          [p](const PanZoomStage& s) { return Point{s.zoom * p.x + s.panX, s.zoom * p.y + s.panY}; },
          [p](const RotateStage& s) {
            const double cs = std::cos(s.radians);
            const double sn = std::sin(s.radians);
            const double dx = p.x - s.cx;
            const double dy = p.y - s.cy;
            return Point{cs * dx - sn * dy + s.cx, sn * dx + cs * dy + s.cy};
          },
      },
      stage);
}

PlaneStage invert_stage(const PlaneStage& stage) {
  return std::visit(
      Overloaded{
          [](const ScaleStage& s) -> PlaneStage {
            if (std::abs(s.sx * s.sy) <= kSingularDet) {
              throw SingularTransform("degenerate scale stage");
            }
            return ScaleStage{1.0 / s.sx, 1.0 / s.sy};
          },
          [](const PanZoomStage& s) -> PlaneStage {
            if (std::abs(s.zoom) <= kSingularDet) {
              throw SingularTransform("pan/zoom stage with zero zoom");
            }
            return PanZoomStage{1.0 / s.zoom, -s.panX / s.zoom, -s.panY / s.zoom};
          },
          [](const RotateStage& s) -> PlaneStage {
            if (!std::isfinite(s.radians)) {
              throw SingularTransform("rotation angle is not finite");
            }
            return RotateStage{-s.radians, s.cx, s.cy};
          },
      },
      stage);
}

Affine2 stage_matrix(const PlaneStage& stage) {
  return std::visit(
      Overloaded{
          [](const ScaleStage& s) { return Affine2::scale(s.sx, s.sy); },
          [](const PanZoomStage& s) { return Affine2{s.zoom, 0, 0, s.zoom, s.panX, s.panY}; },
          [](const RotateStage& s) {
            return compose(Affine2::translate(s.cx, s.cy),
                           compose(Affine2::rotate(s.radians), Affine2::translate(-s.cx, -s.cy)));
          },
      },
      stage);
}

std::vector<PlaneStage> inverse_stages(std::span<const PlaneStage> stages) {
  std::vector<PlaneStage> out;
  out.reserve(stages.size());
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    out.push_back(invert_stage(*it));
  }
  return out;
}

Point pipeline_forward(Point p, std::span<const PlaneStage> stages) {
  for (const auto& s : stages) {
    p = apply_stage(s, p);
  }
  return p;
}

Point pipeline_inverse(Point p, std::span<const PlaneStage> stages) {
  const auto inv = inverse_stages(stages);
  return pipeline_forward(p, inv);
}

Affine2 pipeline_matrix(std::span<const PlaneStage> stages) {
  Affine2 m;
  for (const auto& s : stages) {
    m = compose(stage_matrix(s), m);
  }
  return m;
}

Point transf(double t, const ViewParams& view, std::span<const PlaneStage> suffix) {
  return pipeline_forward(transf(t, view), suffix);
}

double invtransf(Point p, const ViewParams& view, std::span<const PlaneStage> suffix) {
  return invtransf(pipeline_inverse(p, suffix), view);
}

}  // namespace mdpc
