#pragma once

#include <utility>
#include <vector>

#include "mdpc/interaction.hpp"

namespace mdpc {

inline constexpr double kMinThumbPickHeight = 4.0;

// Thumb rect: trough.y + low*trough.h .. trough.y + high*trough.h.
Rect thumb_rect(const ScrollbarModel& m, const Rect& trough);

// Display: trough and thumb. Picking: "trough-above", "thumb" and
// "trough-below" tiling the trough; a thumb shorter than 4 px is inflated
// around its center so it stays grabbable. Empty zones are omitted.
std::pair<std::vector<DrawCmd>, std::vector<PickObject>> scrollbar_build_views(const ScrollbarModel& m,
                                                                               const Rect& trough);

class ScrollbarInteraction : public Interaction {
 public:
  ScrollbarInteraction(ModelStore model, InteractionConfig cfg, ViewParams view);

  const Rect& trough() const { return trough_; }

  std::vector<DrawCmd> display_view() const override;
  std::vector<PickObject> picking_view() const override;

 protected:
  void clear_transient() override { drag_ = {}; }
  void on_view_changed() override;

 private:
  void build_machine();

  struct Drag {
    double pressY = 0.0;
    ScrollbarModel atPress;
  };

  Rect trough_;
  double windowH_;
  Drag drag_;
};

}  // namespace mdpc
