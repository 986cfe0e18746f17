#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mdpc/errors.hpp"
#include "mdpc/transforms.hpp"

using namespace mdpc;

TEST_SUITE("transforms") {

TEST_CASE("wrap splits week, day and fraction") {
  CHECK(wrap(0) == WrapResult{0, 0, 0.0});
  CHECK(wrap(1440 + 720) == WrapResult{0, 1, 0.5});
  CHECK(wrap(kMinutesPerWeek) == WrapResult{1, 0, 0.0});
  const auto neg = wrap(-1);
  CHECK(neg.week == -1);
  CHECK(neg.day == 6);
  CHECK(neg.frac == doctest::Approx(1439.0 / 1440.0));
}

TEST_CASE("wrap stays in range at boundaries") {
  for (double t : {std::nextafter(kMinutesPerWeek, 0.0), std::nextafter(1440.0, 0.0), -1e-300, 1e9 + 0.1}) {
    const auto w = wrap(t);
    CHECK(w.day >= 0);
    CHECK(w.day < 7);
    CHECK(w.frac >= 0.0);
    CHECK(w.frac < 1.0);
    CHECK(invwrap(w) == doctest::Approx(t).epsilon(1e-12));
  }
}

TEST_CASE("transf places Monday noon") {
  ViewParams v;
  const Point p = transf(720, v);
  CHECK(p.x == 0);
  CHECK(p.y == 480);
  v.zoom = 2;
  v.panX = 10;
  v.panY = -5;
  const Point q = transf(1440 * 3 + 360, v);
  CHECK(q.x == 2 * 300 + 10);
  CHECK(q.y == 2 * 240 - 5);
}

TEST_CASE("transf outside the current week throws") {
  ViewParams v;
  v.currentWeek = 2;
  CHECK_THROWS_AS(transf(0, v), WrongWeek);
  CHECK_NOTHROW(transf(2 * kMinutesPerWeek + 5, v));
}

TEST_CASE("invtransf clamps to the grid") {
  ViewParams v;
  CHECK(invtransf({-50, 100}, v) == doctest::Approx(150));
  CHECK(invtransf({10000, 0}, v) == doctest::Approx(6 * 1440));
  const double bottom = invtransf({0, 5000}, v);
  CHECK(bottom < 1440);
  CHECK(bottom == doctest::Approx(1440));
  v.zoom = 0;
  CHECK_THROWS_AS(invtransf({0, 0}, v), SingularTransform);
}

TEST_CASE("invtransf inverts transf") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ut(0, kMinutesPerWeek);
  std::uniform_real_distribution<double> uz(0.25, 4);
  std::uniform_real_distribution<double> up(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    ViewParams v;
    v.zoom = uz(rng);
    v.panX = up(rng);
    v.panY = up(rng);
    v.currentWeek = 3;
    const double t = week_start(3) + ut(rng);
    REQUIRE(std::abs(invtransf(transf(t, v), v) - t) < 1e-6);
  }
}

TEST_CASE("stages and their inverses") {
  const std::vector<PlaneStage> stages{ScaleStage{2, 3}, PanZoomStage{1.5, 10, -20},
                                       RotateStage{std::numbers::pi / 6, 100, 50}};
  const Point p{12.5, -7};
  const Point q = pipeline_forward(p, stages);
  const Point back = pipeline_inverse(q, stages);
  CHECK(back.x == doctest::Approx(p.x));
  CHECK(back.y == doctest::Approx(p.y));

  const Point viaMatrix = pipeline_matrix(stages)(p);
  CHECK(viaMatrix.x == doctest::Approx(q.x));
  CHECK(viaMatrix.y == doctest::Approx(q.y));

  const auto inv = inverse_stages(stages);
  REQUIRE(inv.size() == 3);
  CHECK(std::holds_alternative<RotateStage>(inv[0]));
  CHECK(std::holds_alternative<ScaleStage>(inv[2]));
}

TEST_CASE("rotation about a pivot fixes the pivot") {
  const PlaneStage r = RotateStage{std::numbers::pi / 2, 10, 10};
  const Point c = apply_stage(r, {10, 10});
  CHECK(c.x == doctest::Approx(10));
  CHECK(c.y == doctest::Approx(10));
  const Point x = apply_stage(r, {11, 10});
  CHECK(x.x == doctest::Approx(10));
  CHECK(x.y == doctest::Approx(11));
}

TEST_CASE("degenerate stages cannot be inverted") {
  CHECK_THROWS_AS(invert_stage(ScaleStage{0, 1}), SingularTransform);
  CHECK_THROWS_AS(invert_stage(PanZoomStage{0, 0, 0}), SingularTransform);
}

TEST_CASE("transf with a suffix") {
  ViewParams v;
  const std::vector<PlaneStage> suffix{RotateStage{0.3, 350, 480}};
  const double t = 2 * 1440 + 600;
  const Point p = transf(t, v, suffix);
  CHECK(invtransf(p, v, suffix) == doctest::Approx(t).epsilon(1e-12));
}

TEST_CASE("view follows the window") {
  auto v = ViewParams::for_window(1400, 800);
  CHECK(v.cellWidth == 200);
  CHECK(v.cellHeight == 800);
  v.resize(700, 600);
  CHECK(v.cellWidth == 100);
  CHECK(v.windowH == 600);
}

}
