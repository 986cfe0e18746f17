#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mdpc/geometry.hpp"

namespace mdpc {

// Time is measured in minutes since a Monday 00:00 epoch.
inline constexpr double kMinutesPerDay = 1440.0;
inline constexpr double kMinutesPerWeek = 7 * kMinutesPerDay;
inline constexpr int kDaysPerWeek = 7;

struct WrapResult {
  std::int64_t week = 0;
  int day = 0;        // 0 = Monday .. 6 = Sunday
  double frac = 0.0;  // fraction of the day, [0, 1)

  friend bool operator==(const WrapResult&, const WrapResult&) = default;
};

// Folds a time onto the week grid (floor semantics, so t < 0 lands in
// negative weeks with a nonnegative day and fraction).
WrapResult wrap(double t);
double invwrap(const WrapResult& w);

inline double week_start(std::int64_t week) { return static_cast<double>(week) * kMinutesPerWeek; }

struct ViewParams {
  double cellWidth = 100.0;   // px per day column
  double cellHeight = 960.0;  // px per full day
  double zoom = 1.0;
  double panX = 0.0;
  double panY = 0.0;
  std::int64_t currentWeek = 0;
  double windowW = 700.0;
  double windowH = 960.0;

  // Cells follow the window: a seventh of the width, the full height.
  static ViewParams for_window(double w, double h);
  void resize(double w, double h);

  bool valid() const { return cellWidth > 0 && cellHeight > 0 && zoom > 0; }

  friend bool operator==(const ViewParams&, const ViewParams&) = default;
};

// Model time -> view point. Throws WrongWeek if t is outside view.currentWeek.
Point transf(double t, const ViewParams& view);

// View point -> model time. Out-of-grid points clamp to the grid edges.
// Throws SingularTransform when zoom <= 0.
double invtransf(Point p, const ViewParams& view);

// Plane bijections appended after transf.
struct ScaleStage {
  double sx = 1.0;
  double sy = 1.0;
  friend bool operator==(const ScaleStage&, const ScaleStage&) = default;
};

// p -> zoom * p + pan
struct PanZoomStage {
  double zoom = 1.0;
  double panX = 0.0;
  double panY = 0.0;
  friend bool operator==(const PanZoomStage&, const PanZoomStage&) = default;
};

// Rotation by `radians` around (cx, cy). Positive angles turn +x toward +y.
struct RotateStage {
  double radians = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  friend bool operator==(const RotateStage&, const RotateStage&) = default;
};

using PlaneStage = std::variant<ScaleStage, PanZoomStage, RotateStage>;

Point apply_stage(const PlaneStage& stage, Point p);
PlaneStage invert_stage(const PlaneStage& stage);
Affine2 stage_matrix(const PlaneStage& stage);

// Reversed list of per-stage inverses.
std::vector<PlaneStage> inverse_stages(std::span<const PlaneStage> stages);

Point pipeline_forward(Point p, std::span<const PlaneStage> stages);
Point pipeline_inverse(Point p, std::span<const PlaneStage> stages);
Affine2 pipeline_matrix(std::span<const PlaneStage> stages);

// transf followed by `suffix`, and its mirror: the suffix inverses run first.
Point transf(double t, const ViewParams& view, std::span<const PlaneStage> suffix);
double invtransf(Point p, const ViewParams& view, std::span<const PlaneStage> suffix);

}  // namespace mdpc
