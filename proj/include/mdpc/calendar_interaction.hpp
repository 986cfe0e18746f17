#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdpc/interaction.hpp"

namespace mdpc {

inline constexpr std::string_view kCalendarTagPrefix = "cal-ev-";
inline constexpr double kMaxHandleHeight = 8.0;
inline constexpr double kHandleFraction = 0.25;

enum class EventPart { Start, Move, End };

std::string_view to_string(EventPart part);
std::string calendar_tag(std::int64_t id, EventPart part);

struct PartTag {
  std::int64_t id = 0;
  EventPart part = EventPart::Move;
};

// Parses "cal-ev-{id}-{start|move|end}".
std::optional<PartTag> parse_calendar_tag(std::string_view tag);

// Geometry of one visible event in view coordinates. The three picking
// rects tile `rect` exactly.
struct EventLayout {
  std::int64_t id = 0;
  int day = 0;
  LayoutSlot slot;
  Rect rect;
  Rect startHandle;
  Rect body;
  Rect endHandle;
};

// Lays out the events of view.currentWeek. An event is drawn in the day
// column where its visible part starts and clipped to that day.
std::vector<EventLayout> calendar_layout(std::span<const CalendarEvent> events, const ViewParams& view);

std::pair<std::vector<DrawCmd>, std::vector<PickObject>> calendar_build_views(
    std::span<const CalendarEvent> events, const ViewParams& view, const InteractionConfig& cfg);

// Rounds to the nearest multiple of `step`; step <= 0 leaves t unchanged.
double snap_minutes(double t, double step);

// Week view: drag the body to move an event, drag a handle to move one edge.
class CalendarInteraction : public Interaction {
 public:
  CalendarInteraction(ModelStore model, InteractionConfig cfg, ViewParams view);

  std::vector<DrawCmd> display_view() const override;
  std::vector<PickObject> picking_view() const override;
  // transf already applies the view's pan and zoom.
  std::vector<PlaneStage> scene_stages() const override { return {}; }

  struct Grab {
    std::int64_t id = 0;
    EventPart part = EventPart::Move;
    double offset = 0.0;  // invtransf(press) - grabbed edge (start, or end for End)
    double duration = 0.0;
  };

  const std::optional<Grab>& grab() const { return grab_; }

 protected:
  void clear_transient() override { grab_.reset(); }

 private:
  void build_machine();
  void on_press(const Event& e);
  void on_move(const Event& e);

  std::optional<Grab> grab_;
};

}  // namespace mdpc
