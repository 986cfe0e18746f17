#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdpc/interaction.hpp"

namespace mdpc {

// Tags of the picking objects used by drag interactions.
inline constexpr std::string_view kHystTag = "hyst";
inline constexpr std::string_view kObjectTagPrefix = "obj-";
inline constexpr std::string_view kGuideHPrefix = "guide-h-";
inline constexpr std::string_view kGuideVPrefix = "guide-v-";
inline constexpr std::string_view kGuideStickPrefix = "guide-stick-";

inline constexpr int kObjectZ = 0;
inline constexpr int kHystZ = 100;
inline constexpr int kBandZ = 200;
inline constexpr int kStickZ = 300;

std::string object_tag(std::int64_t id);

// Invisible circle of radius hysteresisRadius centered on the press point.
std::vector<PickObject> hyst_build_picking(Point press, const InteractionConfig& cfg);

// Snapping rule of one axis: the object center goes to guidePos + delta,
// which puts one feature (edge or center) exactly on the guide.
struct AxisSnap {
  std::int64_t guideId = 0;
  double guidePos = 0.0;
  double delta = 0.0;

  double center() const { return guidePos + delta; }

  friend bool operator==(const AxisSnap&, const AxisSnap&) = default;
};

struct GuideZone {
  PickObject pick;
  std::optional<AxisSnap> snapY;  // set for horizontal bands and sticky squares
  std::optional<AxisSnap> snapX;  // set for vertical bands and sticky squares
};

// Three bands per guide (thickness 2 * attractionDistance) placed so that the
// object's top/center/bottom (left/center/right) reaches the guide while the
// cursor is inside, shifted by the press offset relPos, plus a sticky square
// at every horizontal x vertical band crossing. `extent` is the scene-space
// span the bands cover along their axis.
std::vector<GuideZone> guides_build_picking(std::span<const Guide> guides, const DragObject& obj, Point relPos,
                                            const InteractionConfig& cfg, const Rect& extent);

// Hysteresis drag'n'drop (start -> waitHyst -> dragging), optionally
// extended with magnetic guides (dragInHGuide, dragInVGuide, inStickGuide).
class DragInteraction : public Interaction {
 public:
  DragInteraction(ModelStore model, InteractionConfig cfg, ViewParams view, bool withGuides);

  bool with_guides() const { return withGuides_; }

  std::vector<DrawCmd> display_view() const override;
  std::vector<PickObject> picking_view() const override;

  struct Context {
    bool active = false;
    std::int64_t targetId = 0;
    Point press;        // scene
    Point pressScreen;  // screen
    Point relPos;       // press - object center
  };

  const Context& context() const { return ctx_; }
  const std::vector<PickObject>& hysteresis_picking() const { return hyst_; }
  const std::vector<GuideZone>& guide_zones() const { return zones_; }
  const std::optional<GuideZone>& active_zone() const { return activeZone_; }

 protected:
  void clear_transient() override;

 private:
  void build_machine();
  void on_press(const Event& e);
  void start_drag();
  void follow(const Event& e);
  void enter_zone(const Event& e);
  void snap(const Event& e);
  void end_drag();
  Rect scene_extent() const;

  bool withGuides_;
  Context ctx_;
  std::vector<PickObject> hyst_;
  std::vector<GuideZone> zones_;
  std::optional<GuideZone> activeZone_;
};

}  // namespace mdpc
