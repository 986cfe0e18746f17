#include <doctest.h>

#include <numbers>

#include "mdpc/renderloop.hpp"

using namespace mdpc;

TEST_SUITE("renderloop") {

TEST_CASE("frames are pure functions of the snapshot") {
  for (auto k : {InteractionKind::Scrollbar, InteractionKind::Dnd, InteractionKind::Guides, InteractionKind::Calendar}) {
    auto a = make_interaction(k, default_model(k));
    auto b = make_interaction(k, default_model(k));
    const std::vector<PlaneStage> extra{RotateStage{0.4, 100, 100}};
    const auto f1 = render_frame(*a, extra, 1);
    const auto f2 = render_frame(*a, extra, 1);
    const auto f3 = render_frame(*b, extra, 1);
    CHECK(display_json(f1.display) == display_json(f2.display));
    CHECK(display_json(f1.display) == display_json(f3.display));
    CHECK(f1.pickBuffer.to_ppm() == f3.pickBuffer.to_ppm());
  }
}

TEST_CASE("buffer matches the window and holds the picking ids") {
  auto i = make_interaction(InteractionKind::Dnd, default_model(InteractionKind::Dnd));
  const auto f = render_frame(*i, {}, 4);
  CHECK(f.seq == 4);
  CHECK(f.pickBuffer.width() == 800);
  CHECK(f.pickBuffer.height() == 600);
  const PickId id = pick(f.pickBuffer, {200, 150});
  CHECK(f.tag_of(id) == "obj-1");
  CHECK(f.tag_of(kBackgroundId).empty());
  CHECK(f.tag_of(pick(f.pickBuffer, {5, 5})).empty());
}

TEST_CASE("extra stages move both views together") {
  auto i = make_interaction(InteractionKind::Dnd, default_model(InteractionKind::Dnd));
  const std::vector<PlaneStage> shift{PanZoomStage{1, 100, 50}};
  const auto f = render_frame(*i, shift, 1);
  CHECK(f.tag_of(pick(f.pickBuffer, {300, 200})) == "obj-1");
  CHECK(f.tag_of(pick(f.pickBuffer, {200, 150})).empty());
  for (const auto& cmd : f.display) {
    CHECK(cmd.transform == Affine2::translate(100, 50));
  }
}

TEST_CASE("display json layout") {
  DrawCmd c;
  c.geom = RectGeom{1, 2, 3, 4};
  c.fill = "#102030";
  c.z = 2;
  c.tag = "obj-1";
  const auto j = to_json(c);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"shape", "x", "y", "w", "h", "fill", "z", "tag", "layer", "transform"});
  CHECK(j["shape"] == "rect");
  CHECK(j["layer"] == "display");
  CHECK(hex_color({0x10, 0x20, 0x30}) == "#102030");
}

TEST_CASE("picking debug view colors by id") {
  PickObject o;
  o.id = 0xabcdef;
  o.shape = Circle{1, 2, 3};
  o.tag = "hyst";
  const std::vector<PickObject> objs{o};
  const auto cmds = picking_debug_view(objs);
  REQUIRE(cmds.size() == 1);
  CHECK(cmds[0].fill == "#abcdef");
  CHECK(cmds[0].layer == Layer::PickingDebug);
}

}
