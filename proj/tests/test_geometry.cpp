#include <doctest.h>

#include <numbers>

#include "mdpc/errors.hpp"
#include "mdpc/geometry.hpp"

using namespace mdpc;

TEST_SUITE("geometry") {

TEST_CASE("rect containment is half-open") {
  const Rect r{10, 20, 30, 40};
  CHECK(contains(r, {10, 20}));
  CHECK(contains(r, {39.999, 59.999}));
  CHECK_FALSE(contains(r, {40, 30}));
  CHECK_FALSE(contains(r, {20, 60}));
  CHECK_FALSE(contains(r, {9.999, 30}));
  CHECK(r.center() == Point{25, 40});
}

TEST_CASE("circle containment is closed") {
  const Circle c{0, 0, 5};
  CHECK(contains(c, {5, 0}));
  CHECK(contains(c, {3, 4}));
  CHECK_FALSE(contains(c, {3.01, 4}));
  CHECK(contains(Shape{c}, {0, -5}));
}

TEST_CASE("validity") {
  CHECK(valid(Rect{0, 0, 1, 1}));
  CHECK(valid(Rect{0, 0, 0, 0}));
  CHECK_FALSE(valid(Rect{0, 0, -1, 1}));
  CHECK_FALSE(valid(Circle{0, 0, -1}));
  CHECK_FALSE(valid(Shape{Rect{std::numeric_limits<double>::quiet_NaN(), 0, 1, 1}}));
}

TEST_CASE("bounds") {
  CHECK(bounds(Shape{Circle{5, 6, 2}}) == Rect{3, 4, 4, 4});
  CHECK(bounds(Shape{Rect{1, 2, 3, 4}}) == Rect{1, 2, 3, 4});
}

TEST_CASE("rect intersection") {
  auto i = rect_intersection({0, 0, 10, 10}, {5, 6, 10, 10});
  REQUIRE(i);
  CHECK(*i == Rect{5, 6, 5, 4});
  CHECK_FALSE(rect_intersection({0, 0, 10, 10}, {10, 0, 5, 5}));
  CHECK_FALSE(rect_intersection({0, 0, 10, 10}, {20, 20, 5, 5}));
}

TEST_CASE("affine compose and invert") {
  const Affine2 r = Affine2::rotate(std::numbers::pi / 2);
  const Point p = r({1, 0});
  CHECK(p.x == doctest::Approx(0).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(1));

  const Affine2 m = compose(Affine2::translate(3, 4), Affine2::scale(2, 5));
  CHECK(m({1, 1}) == Point{5, 9});
  const Affine2 inv = affine_invert(m);
  const Point back = inv(m({-7.25, 11.5}));
  CHECK(back.x == doctest::Approx(-7.25));
  CHECK(back.y == doctest::Approx(11.5));
  CHECK(affine_invert(Affine2{}).is_identity());
}

TEST_CASE("singular transforms are rejected") {
  CHECK_THROWS_AS(affine_invert(Affine2::scale(0, 1)), SingularTransform);
  CHECK_THROWS_AS(affine_invert(Affine2{1, 2, 2, 4, 0, 0}), SingularTransform);
}

}
