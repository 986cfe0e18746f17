#include "mdpc/renderloop.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mdpc {

std::string hex_color(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::vector<DrawCmd> picking_debug_view(std::span<const PickObject> objects) {
  std::vector<DrawCmd> out;
  out.reserve(objects.size());
  for (const auto& o : objects) {
    DrawCmd cmd;
    if (const auto* r = std::get_if<Rect>(&o.shape)) {
      cmd.geom = RectGeom{r->x, r->y, r->w, r->h};
    } else {
      const auto& c = std::get<Circle>(o.shape);
      cmd.geom = CircleGeom{c.cx, c.cy, c.r};
    }
    cmd.fill = hex_color(encode_id(o.id));
    cmd.z = o.z;
    cmd.tag = o.tag;
    cmd.layer = Layer::PickingDebug;
    cmd.transform = o.transform;
    out.push_back(std::move(cmd));
  }
  std::stable_sort(out.begin(), out.end(), [](const DrawCmd& a, const DrawCmd& b) { return a.z < b.z; });
  return out;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

nlohmann::ordered_json to_json(const DrawCmd& cmd) {
  nlohmann::ordered_json j;
  std::visit(Overloaded{
                 [&](const RectGeom& g) {
                   j["shape"] = "rect";
                   j["x"] = g.x;
                   j["y"] = g.y;
                   j["w"] = g.w;
                   j["h"] = g.h;
                 },
                 [&](const CircleGeom& g) {
                   j["shape"] = "circle";
                   j["cx"] = g.cx;
                   j["cy"] = g.cy;
                   j["r"] = g.r;
                 },
                 [&](const LineGeom& g) {
                   j["shape"] = "line";
                   j["x1"] = g.x1;
                   j["y1"] = g.y1;
                   j["x2"] = g.x2;
                   j["y2"] = g.y2;
                   j["width"] = g.width;
                 },
                 [&](const TextGeom& g) {
                   j["shape"] = "text";
                   j["x"] = g.x;
                   j["y"] = g.y;
                   j["text"] = g.text;
                   j["size"] = g.size;
                 },
             },
             cmd.geom);
  j["fill"] = cmd.fill;
  j["z"] = cmd.z;
  j["tag"] = cmd.tag;
  j["layer"] = cmd.layer == Layer::Display ? "display" : "picking-debug";
  const Affine2& m = cmd.transform;
  j["transform"] = {m.a, m.b, m.c, m.d, m.e, m.f};
  return j;
}

nlohmann::ordered_json to_json(std::span<const DrawCmd> cmds) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cmds) {
    arr.push_back(to_json(c));
  }
  return arr;
}

std::string display_json(std::span<const DrawCmd> cmds) { return to_json(cmds).dump(); }

std::string_view FrameOutput::tag_of(PickId id) const {
  if (id == kBackgroundId) {
    return {};
  }
  for (const auto& o : picking) {
    if (o.id == id) {
      return o.tag;
    }
  }
  return {};
}

std::vector<PlaneStage> screen_stages(const Interaction& interaction, std::span<const PlaneStage> extra) {
  auto stages = interaction.scene_stages();
  stages.insert(stages.end(), extra.begin(), extra.end());
  return stages;
}

FrameOutput render_frame(const Interaction& interaction, std::span<const PlaneStage> extra, std::uint64_t seq) {
  const auto stages = screen_stages(interaction, extra);
  const Affine2 toScreen = pipeline_matrix(stages);

  FrameOutput out;
  out.seq = seq;
  out.display = interaction.display_view();
  for (auto& cmd : out.display) {
    cmd.transform = compose(toScreen, cmd.transform);
  }
  std::stable_sort(out.display.begin(), out.display.end(), [](const DrawCmd& a, const DrawCmd& b) { return a.z < b.z; });

  out.picking = interaction.picking_view();
  assign_stable_ids(out.picking);
  for (auto& o : out.picking) {
    o.transform = compose(toScreen, o.transform);
  }
  const ViewParams& v = interaction.view();
  out.pickBuffer = rasterize(out.picking, static_cast<int>(std::lround(v.windowW)),
                             static_cast<int>(std::lround(v.windowH)));
  return out;
}

}  // namespace mdpc
