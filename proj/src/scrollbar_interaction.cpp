#include "mdpc/scrollbar_interaction.hpp"

#include <algorithm>

namespace mdpc {

Rect thumb_rect(const ScrollbarModel& m, const Rect& trough) {
  const double top = trough.y + m.low * trough.h;
  const double bottom = trough.y + m.high * trough.h;
  return {trough.x, top, trough.w, bottom - top};
}

std::pair<std::vector<DrawCmd>, std::vector<PickObject>> scrollbar_build_views(const ScrollbarModel& m,
                                                                               const Rect& trough) {
  const Rect thumb = thumb_rect(m, trough);

  std::vector<DrawCmd> display;
  DrawCmd troughCmd;
  troughCmd.geom = RectGeom{trough.x, trough.y, trough.w, trough.h};
  troughCmd.fill = "#e0e0e0";
  troughCmd.tag = "trough";
  display.push_back(std::move(troughCmd));
  DrawCmd thumbCmd;
  thumbCmd.geom = RectGeom{thumb.x, thumb.y, thumb.w, thumb.h};
  thumbCmd.fill = "#616161";
  thumbCmd.z = 1;
  thumbCmd.tag = "thumb";
  display.push_back(std::move(thumbCmd));

  double top = thumb.y;
  double bottom = thumb.bottom();
  if (bottom - top < kMinThumbPickHeight) {
    const double mid = (top + bottom) / 2;
    top = std::max(trough.y, mid - kMinThumbPickHeight / 2);
    bottom = std::min(trough.bottom(), top + kMinThumbPickHeight);
    top = std::max(trough.y, bottom - kMinThumbPickHeight);
  }
  std::vector<PickObject> picking;
  const auto add = [&](const char* tag, double y0, double y1) {
    if (y1 <= y0) {
      return;
    }
    PickObject p;
    p.shape = Rect{trough.x, y0, trough.w, y1 - y0};
    p.tag = tag;
    picking.push_back(std::move(p));
  };
  add("trough-above", trough.y, top);
  add("thumb", top, bottom);
  add("trough-below", bottom, trough.bottom());
  return {std::move(display), std::move(picking)};
}

ScrollbarInteraction::ScrollbarInteraction(ModelStore model, InteractionConfig cfg, ViewParams view)
    : Interaction(InteractionKind::Scrollbar, "idle", std::move(model), cfg, view),
      trough_(cfg.trough),
      windowH_(view.windowH) {
  build_machine();
}

void ScrollbarInteraction::build_machine() {
  machine_.add_state("idle").add_state("dragging");
  machine_.add_transition("idle", {"press", Pattern::on_tag(EventKind::Press, "thumb"), "dragging", {},
                                   [this](const Event& e) { drag_ = {e.p.y, model().scrollbar}; }});
  machine_.add_transition("idle", {"pageUp", Pattern::on_tag(EventKind::Press, "trough-above"), "idle", {},
                                   [this](const Event&) {
                                     auto& sb = mutable_model().scrollbar;
                                     sb = scrollbar_shift(sb, -sb.extent());
                                   }});
  machine_.add_transition("idle", {"pageDown", Pattern::on_tag(EventKind::Press, "trough-below"), "idle", {},
                                   [this](const Event&) {
                                     auto& sb = mutable_model().scrollbar;
                                     sb = scrollbar_shift(sb, sb.extent());
                                   }});
  // dv = dy / trough height, measured from the press.
  machine_.add_transition("dragging", {"move", Pattern::on(EventKind::Move), "dragging", {}, [this](const Event& e) {
                                         const double dv = (e.p.y - drag_.pressY) / trough_.h;
                                         mutable_model().scrollbar = scrollbar_shift(drag_.atPress, dv);
                                       }});
  machine_.add_transition("dragging", {"release", Pattern::on(EventKind::Release), "idle", {},
                                       [this](const Event&) { drag_ = {}; }});
  machine_.validate();
}

void ScrollbarInteraction::on_view_changed() {
  if (view().windowH != windowH_) {
    windowH_ = view().windowH;
    trough_.h = std::max(1.0, windowH_ - 2 * trough_.y);
  }
}

std::vector<DrawCmd> ScrollbarInteraction::display_view() const {
  return scrollbar_build_views(model().scrollbar, trough_).first;
}

std::vector<PickObject> ScrollbarInteraction::picking_view() const {
  return scrollbar_build_views(model().scrollbar, trough_).second;
}

}  // namespace mdpc
