#include "mdpc/drag_interaction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdpc/errors.hpp"

namespace mdpc {

std::string object_tag(std::int64_t id) { return std::string(kObjectTagPrefix) + std::to_string(id); }

std::vector<PickObject> hyst_build_picking(Point press, const InteractionConfig& cfg) {
  PickObject circle;
  circle.shape = Circle{press.x, press.y, cfg.hysteresisRadius};
  circle.z = kHystZ;
  circle.tag = std::string(kHystTag);
  return {circle};
}

namespace {

struct BandSpec {
  const char* name;
  double delta;
};

// Center band last with a higher z so it wins when bands of a small
// object overlap.
std::vector<GuideZone> bands_for(const Guide& g, const DragObject& obj, Point relPos, double a, const Rect& extent) {
  const bool horizontal = g.axis == Axis::Horizontal;
  const double half = horizontal ? obj.h / 2 : obj.w / 2;
  const BandSpec specs[] = {
      {horizontal ? "top" : "left", +half},
      {horizontal ? "bottom" : "right", -half},
      {"center", 0.0},
  };
  std::vector<GuideZone> out;
  for (const auto& spec : specs) {
    GuideZone z;
    const AxisSnap snap{g.id, g.pos, spec.delta};
    if (horizontal) {
      const double c = g.pos + spec.delta + relPos.y;
      z.pick.shape = Rect{extent.x, c - a, extent.w, 2 * a};
      z.pick.tag = std::string(kGuideHPrefix) + spec.name + "-" + std::to_string(g.id);
      z.snapY = snap;
    } else {
      const double c = g.pos + spec.delta + relPos.x;
      z.pick.shape = Rect{c - a, extent.y, 2 * a, extent.h};
      z.pick.tag = std::string(kGuideVPrefix) + spec.name + "-" + std::to_string(g.id);
      z.snapX = snap;
    }
    z.pick.z = spec.delta == 0.0 ? kBandZ + 1 : kBandZ;
    out.push_back(std::move(z));
  }
  return out;
}

std::string_view part_of(std::string_view tag, std::string_view prefix) {
  tag.remove_prefix(prefix.size());
  return tag.substr(0, tag.find('-'));
}

}  // namespace

std::vector<GuideZone> guides_build_picking(std::span<const Guide> guides, const DragObject& obj, Point relPos,
                                            const InteractionConfig& cfg, const Rect& extent) {
  const double a = cfg.attractionDistance;
  std::vector<GuideZone> hBands;
  std::vector<GuideZone> vBands;
  for (const auto& g : guides) {
    auto bands = bands_for(g, obj, relPos, a, extent);
    auto& dst = g.axis == Axis::Horizontal ? hBands : vBands;
    dst.insert(dst.end(), bands.begin(), bands.end());
  }
  std::vector<GuideZone> out;
  out.insert(out.end(), hBands.begin(), hBands.end());
  out.insert(out.end(), vBands.begin(), vBands.end());
  // Each crossing gets its own zone that snaps both axes.
  for (const auto& h : hBands) {
    for (const auto& v : vBands) {
      const auto square = rect_intersection(std::get<Rect>(h.pick.shape), std::get<Rect>(v.pick.shape));
      if (!square) {
        continue;
      }
      GuideZone z;
      z.pick.shape = *square;
      z.pick.z = kStickZ;
      z.pick.tag = std::string(kGuideStickPrefix) + std::string(part_of(h.pick.tag, kGuideHPrefix)) + "-" +
                   std::to_string(h.snapY->guideId) + "-" + std::string(part_of(v.pick.tag, kGuideVPrefix)) + "-" +
                   std::to_string(v.snapX->guideId);
      z.snapY = h.snapY;
      z.snapX = v.snapX;
      out.push_back(std::move(z));
    }
  }
  return out;
}

DragInteraction::DragInteraction(ModelStore model, InteractionConfig cfg, ViewParams view, bool withGuides)
    : Interaction(withGuides ? InteractionKind::Guides : InteractionKind::Dnd, "start", std::move(model), cfg, view),
      withGuides_(withGuides) {
  build_machine();
}

void DragInteraction::build_machine() {
  auto& m = machine_;
  m.add_state("start").add_state("waitHyst").add_state("dragging");

  m.add_transition("start", {"press", Pattern::on_prefix(EventKind::Press, std::string(kObjectTagPrefix)),
                             "waitHyst", {}, [this](const Event& e) { on_press(e); }});

  m.add_transition("waitHyst", {"release", Pattern::on(EventKind::Release), "start", {}, [this](const Event&) {
                                  const auto id = ctx_.targetId;
                                  end_drag();
                                  notify("select", id);
                                }});
  m.add_transition("waitHyst", {"drag", Pattern::on_tag(EventKind::Leave, std::string(kHystTag)), "dragging", {},
                                [this](const Event&) { start_drag(); }});
  // A circle too small to cover any pixel center never produces a Leave;
  // leaving the press pixel is then the crossing.
  m.add_transition("waitHyst", {"slip", Pattern::on(EventKind::Move), "dragging",
                                [this](const Event& e) {
                                  return e.tag != kHystTag &&
                                         (std::floor(e.screen.x) != std::floor(ctx_.pressScreen.x) ||
                                          std::floor(e.screen.y) != std::floor(ctx_.pressScreen.y));
                                },
                                [this](const Event& e) {
                                  start_drag();
                                  follow(e);
                                }});

  const auto addEnterZones = [this, &m](const std::string& from) {
    m.add_transition(from, {"enterH", Pattern::on_prefix(EventKind::Enter, std::string(kGuideHPrefix)),
                            "dragInHGuide", {}, [this](const Event& e) { enter_zone(e); }});
    m.add_transition(from, {"enterV", Pattern::on_prefix(EventKind::Enter, std::string(kGuideVPrefix)),
                            "dragInVGuide", {}, [this](const Event& e) { enter_zone(e); }});
    m.add_transition(from, {"enterStick", Pattern::on_prefix(EventKind::Enter, std::string(kGuideStickPrefix)),
                            "inStickGuide", {}, [this](const Event& e) { enter_zone(e); }});
  };
  const auto release = Transition{"release", Pattern::on(EventKind::Release), "start", {},
                                  [this](const Event&) { end_drag(); }};

  m.add_transition("dragging", {"move", Pattern::on(EventKind::Move), "dragging", {},
                                [this](const Event& e) { follow(e); }});
  m.add_transition("dragging", release);

  if (withGuides_) {
    m.add_state("dragInHGuide").add_state("dragInVGuide").add_state("inStickGuide");
    addEnterZones("dragging");

    const auto leaveActive = [this](const Event& e) { return activeZone_ && activeZone_->pick.tag == e.tag; };
    const auto leave = [this](const Event& e) {
      activeZone_.reset();
      follow(e);
    };
    for (const char* state : {"dragInHGuide", "dragInVGuide"}) {
      m.add_transition(state, {"move", Pattern::on(EventKind::Move), state, {}, [this](const Event& e) { snap(e); }});
      m.add_transition(state, {"leave", Pattern::on(EventKind::Leave), "dragging", leaveActive, leave});
      addEnterZones(state);
      m.add_transition(state, release);
    }
    // No Move transition: the object is already stuck on both axes.
    m.add_transition("inStickGuide", {"leave", Pattern::on(EventKind::Leave), "dragging", leaveActive, leave});
    m.add_transition("inStickGuide", release);
  }
  m.validate();
}

void DragInteraction::on_press(const Event& e) {
  const std::string_view idText = std::string_view(e.tag).substr(kObjectTagPrefix.size());
  const std::int64_t id = std::stoll(std::string(idText));
  const DragObject& obj = model().object(id);
  ctx_ = {true, id, e.p, e.screen, e.p - Point{obj.x, obj.y}};
  hyst_ = hyst_build_picking(e.p, cfg_);
}

void DragInteraction::start_drag() {
  hyst_.clear();
  zones_.clear();
  if (withGuides_) {
    zones_ = guides_build_picking(model().guides, model().object(ctx_.targetId), ctx_.relPos, cfg_, scene_extent());
  }
}

void DragInteraction::follow(const Event& e) {
  DragObject& obj = mutable_model().object(ctx_.targetId);
  obj.x = e.p.x - ctx_.relPos.x;
  obj.y = e.p.y - ctx_.relPos.y;
}

void DragInteraction::enter_zone(const Event& e) {
  auto it = std::find_if(zones_.begin(), zones_.end(), [&](const GuideZone& z) { return z.pick.tag == e.tag; });
  if (it == zones_.end()) {
    throw UnknownId("no guide zone tagged '" + e.tag + "'");
  }
  activeZone_ = *it;
  snap(e);
}

void DragInteraction::snap(const Event& e) {
  DragObject& obj = mutable_model().object(ctx_.targetId);
  obj.x = activeZone_->snapX ? activeZone_->snapX->center() : e.p.x - ctx_.relPos.x;
  obj.y = activeZone_->snapY ? activeZone_->snapY->center() : e.p.y - ctx_.relPos.y;
}

void DragInteraction::end_drag() { clear_transient(); }

void DragInteraction::clear_transient() {
  hyst_.clear();
  zones_.clear();
  activeZone_.reset();
  ctx_ = {};
}

Rect DragInteraction::scene_extent() const {
  // Window corners pulled back into scene space, padded by the window
  // diagonal.
  const auto stages = scene_stages();
  const ViewParams& v = view();
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (Point c : {Point{0, 0}, Point{v.windowW, 0}, Point{0, v.windowH}, Point{v.windowW, v.windowH}}) {
    const Point q = pipeline_inverse(c, stages);
    x0 = std::min(x0, q.x);
    y0 = std::min(y0, q.y);
    x1 = std::max(x1, q.x);
    y1 = std::max(y1, q.y);
  }
  const double pad = std::hypot(x1 - x0, y1 - y0);
  return {x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad};
}

std::vector<DrawCmd> DragInteraction::display_view() const {
  std::vector<DrawCmd> out;
  if (withGuides_) {
    const Rect ext = scene_extent();
    for (const auto& g : model().guides) {
      DrawCmd line;
      if (g.axis == Axis::Horizontal) {
        line.geom = LineGeom{ext.x, g.pos, ext.right(), g.pos, 1};
      } else {
        line.geom = LineGeom{g.pos, ext.y, g.pos, ext.bottom(), 1};
      }
      line.fill = "#888888";
      line.z = 1;
      line.tag = "guide-" + std::to_string(g.id);
      out.push_back(std::move(line));
    }
  }
  for (const auto& o : model().objects) {
    DrawCmd rect;
    rect.geom = RectGeom{o.x - o.w / 2, o.y - o.h / 2, o.w, o.h};
    const bool dragged = ctx_.active && ctx_.targetId == o.id;
    rect.fill = dragged ? "#2e7d32" : "#66bb6a";
    rect.z = dragged ? 3 : 2;
    rect.tag = object_tag(o.id);
    out.push_back(std::move(rect));
  }
  return out;
}

std::vector<PickObject> DragInteraction::picking_view() const {
  std::vector<PickObject> out;
  for (const auto& o : model().objects) {
    PickObject p;
    p.shape = Rect{o.x - o.w / 2, o.y - o.h / 2, o.w, o.h};
    p.z = kObjectZ;
    p.tag = object_tag(o.id);
    p.visible = true;
    out.push_back(std::move(p));
  }
  out.insert(out.end(), hyst_.begin(), hyst_.end());
  for (const auto& z : zones_) {
    out.push_back(z.pick);
  }
  return out;
}

}  // namespace mdpc
