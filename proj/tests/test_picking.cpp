#include <doctest.h>

#include <numbers>
#include <random>

#include "mdpc/errors.hpp"
#include "mdpc/oracles.hpp"
#include "mdpc/picking.hpp"

using namespace mdpc;

namespace {

PickObject obj(PickId id, Shape s, int z, std::string tag = {}) {
  PickObject o;
  o.id = id;
  o.shape = s;
  o.z = z;
  o.tag = std::move(tag);
  return o;
}

}  // namespace

TEST_SUITE("picking") {

TEST_CASE("id color round trip") {
  for (PickId id : {0u, 1u, 255u, 256u, 65535u, 0x123456u, kMaxPickId}) {
    CHECK(decode_id(encode_id(id)) == id);
  }
  CHECK(encode_id(0x123456) == Rgb{0x12, 0x34, 0x56});
  CHECK_THROWS_AS(encode_id(kMaxPickId + 1), IdOverflow);
}

TEST_CASE("rasterize samples pixel centers") {
  const std::vector<PickObject> objs{obj(1, Rect{2, 2, 3, 3}, 0)};
  const auto buf = rasterize(objs, 8, 8);
  CHECK(buf.at(2, 2) == 1);
  CHECK(buf.at(4, 4) == 1);
  CHECK(buf.at(5, 5) == 0);
  CHECK(buf.at(1, 2) == 0);

  const std::vector<PickObject> half{obj(1, Rect{2.6, 0, 1, 1}, 0)};
  const auto b2 = rasterize(half, 8, 1);
  CHECK(b2.at(2, 0) == 0);  // center 2.5 is outside
  CHECK(b2.at(3, 0) == 1);
}

TEST_CASE("higher z wins and equal z goes to the later object") {
  const std::vector<PickObject> objs{obj(1, Rect{0, 0, 10, 10}, 5), obj(2, Rect{0, 0, 10, 10}, 1),
                                     obj(3, Rect{5, 0, 5, 10}, 5)};
  const auto buf = rasterize(objs, 10, 10);
  CHECK(buf.at(0, 0) == 1);
  CHECK(buf.at(7, 3) == 3);
}

TEST_CASE("transformed objects") {
  PickObject o = obj(9, Rect{0, 0, 4, 2}, 0);
  o.transform = compose(Affine2::translate(10, 10), Affine2::rotate(std::numbers::pi / 2));
  const std::vector<PickObject> objs{o};
  const auto buf = rasterize(objs, 20, 20);
  CHECK(buf.at(9, 11) == 9);
  CHECK(buf.at(11, 11) == 0);
  CHECK(buf.at(8, 13) == 9);
}

TEST_CASE("id validation") {
  std::vector<PickObject> objs{obj(0, Rect{0, 0, 1, 1}, 0)};
  CHECK_THROWS_AS(rasterize(objs, 2, 2), IdOverflow);
  objs = {obj(kMaxPickId + 1, Rect{0, 0, 1, 1}, 0)};
  CHECK_THROWS_AS(rasterize(objs, 2, 2), IdOverflow);
  objs = {obj(4, Rect{0, 0, 1, 1}, 0), obj(4, Circle{1, 1, 1}, 0)};
  CHECK_THROWS_AS(rasterize(objs, 2, 2), DuplicateId);
}

TEST_CASE("pick floors and ignores out of range") {
  const std::vector<PickObject> objs{obj(7, Rect{0, 0, 2, 2}, 0)};
  const auto buf = rasterize(objs, 4, 4);
  CHECK(pick(buf, {1.99, 1.99}) == 7);
  CHECK(pick(buf, {2.0, 0.5}) == 0);
  CHECK(pick(buf, {-0.5, 0.5}) == 0);
  CHECK(pick(buf, {0.5, 4.0}) == 0);
}

TEST_CASE("crossings") {
  using C = Crossing;
  CHECK(synthesize_crossings(0, 0).empty());
  CHECK(synthesize_crossings(3, 3).empty());
  CHECK(synthesize_crossings(0, 3) == std::vector<C>{{CrossingKind::Enter, 3}});
  CHECK(synthesize_crossings(3, 0) == std::vector<C>{{CrossingKind::Leave, 3}});
  CHECK(synthesize_crossings(3, 4) == std::vector<C>{{CrossingKind::Leave, 3}, {CrossingKind::Enter, 4}});
}

TEST_CASE("stable ids") {
  CHECK(stable_pick_id("obj-1") == stable_pick_id("obj-1"));
  CHECK(stable_pick_id("obj-1") != stable_pick_id("obj-2"));
  CHECK(stable_pick_id("") >= 1);
  std::vector<PickObject> objs{obj(0, Rect{}, 0, "a"), obj(0, Rect{}, 0, "b"), obj(0, Rect{}, 0, "a")};
  assign_stable_ids(objs);
  CHECK(objs[0].id == stable_pick_id("a"));
  CHECK(objs[1].id == stable_pick_id("b"));
  CHECK(objs[2].id != objs[0].id);
  for (const auto& o : objs) {
    CHECK(o.id >= 1);
    CHECK(o.id <= kMaxPickId);
  }
}

TEST_CASE("ppm dump") {
  const std::vector<PickObject> objs{obj(0x010203, Rect{0, 0, 1, 1}, 0)};
  const auto buf = rasterize(objs, 2, 1);
  const std::string ppm = buf.to_ppm();
  const std::string header = "P6\n2 1\n255\n";
  REQUIRE(ppm.size() == header.size() + 6);
  CHECK(ppm.substr(0, header.size()) == header);
  CHECK(ppm.substr(header.size()) == std::string("\x01\x02\x03\x00\x00\x00", 6));
}

TEST_CASE("rasterizer agrees with analytical containment") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 64);
  std::uniform_real_distribution<double> us(1, 20);
  std::uniform_int_distribution<int> uz(0, 3);
  std::vector<PickObject> objs;
  for (PickId id = 1; id <= 12; ++id) {
    if (id % 2) {
      objs.push_back(obj(id, Rect{u(rng), u(rng), us(rng), us(rng)}, uz(rng)));
    } else {
      objs.push_back(obj(id, Circle{u(rng), u(rng), us(rng) / 2}, uz(rng)));
    }
  }
  const auto buf = rasterize(objs, 64, 64);
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      const Point c{x + 0.5, y + 0.5};
      REQUIRE(buf.at(x, y) == oracle_topmost(objs, c));
    }
  }
}

}
