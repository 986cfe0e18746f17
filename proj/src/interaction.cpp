#include "mdpc/interaction.hpp"

#include "mdpc/calendar_interaction.hpp"
#include "mdpc/drag_interaction.hpp"
#include "mdpc/errors.hpp"
#include "mdpc/scrollbar_interaction.hpp"

namespace mdpc {

std::string_view to_string(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::Scrollbar: return "scrollbar";
    case InteractionKind::Dnd: return "dnd";
    case InteractionKind::Guides: return "guides";
    case InteractionKind::Calendar: return "calendar";
  }
  return "?";
}

InteractionKind parse_interaction_kind(std::string_view name) {
  if (name == "scrollbar") return InteractionKind::Scrollbar;
  if (name == "dnd") return InteractionKind::Dnd;
  if (name == "guides") return InteractionKind::Guides;
  if (name == "calendar") return InteractionKind::Calendar;
  throw UnknownInteraction("unknown interaction '" + std::string(name) +
                           "' (expected scrollbar, dnd, guides or calendar)");
}

Interaction::Interaction(InteractionKind kind, std::string initialState, ModelStore model, InteractionConfig cfg,
                         ViewParams view)
    : cfg_(cfg), machine_(std::move(initialState)), kind_(kind), model_(std::move(model)), view_(view) {
  model_.check();
}

void Interaction::reset(ModelStore model) {
  model.check();
  model_ = std::move(model);
  machine_.reset();
  notifications_.clear();
  clear_transient();
}

void Interaction::set_view(const ViewParams& view) {
  if (!view.valid()) {
    throw SingularTransform("view parameters must have positive cell sizes and zoom");
  }
  view_ = view;
  on_view_changed();
}

std::vector<PlaneStage> Interaction::scene_stages() const {
  if (view_.zoom == 1.0 && view_.panX == 0.0 && view_.panY == 0.0) {
    return {};
  }
  return {PanZoomStage{view_.zoom, view_.panX, view_.panY}};
}

ModelStore default_model(InteractionKind kind) {
  ModelStore m;
  switch (kind) {
    case InteractionKind::Scrollbar:
      m.scrollbar = ScrollbarModel::make(0.2, 0.5);
      break;
    case InteractionKind::Dnd:
      m.objects = {{1, 200, 150, 80, 40}, {2, 420, 300, 60, 60}};
      break;
    case InteractionKind::Guides:
      m.objects = {{1, 150, 120, 80, 40}, {2, 520, 420, 60, 60}};
      m.guides = {{1, Axis::Horizontal, 200}, {2, Axis::Horizontal, 400}, {3, Axis::Vertical, 300},
                  {4, Axis::Vertical, 600}};
      break;
    case InteractionKind::Calendar: {
      std::vector<CalendarEvent> events = {
          {1, 0 * kMinutesPerDay + 9 * 60, 0 * kMinutesPerDay + 10 * 60, "Standup"},
          {2, 1 * kMinutesPerDay + 12 * 60, 1 * kMinutesPerDay + 13 * 60, "Lunch"},
          {3, 2 * kMinutesPerDay + 9 * 60, 2 * kMinutesPerDay + 10 * 60, "Review"},
          {4, 2 * kMinutesPerDay + 9 * 60 + 30, 2 * kMinutesPerDay + 10 * 60 + 30, "Design"},
          {5, 4 * kMinutesPerDay + 14 * 60, 4 * kMinutesPerDay + 16 * 60, "Workshop"},
      };
      m.calendar = CalendarTable(std::move(events));
      break;
    }
  }
  return m;
}

ViewParams default_view(InteractionKind kind) {
  if (kind == InteractionKind::Calendar) {
    return ViewParams::for_window(700, 960);
  }
  return ViewParams::for_window(800, 600);
}

std::unique_ptr<Interaction> make_interaction(InteractionKind kind, ModelStore model, InteractionConfig cfg,
                                              std::optional<ViewParams> view) {
  const ViewParams v = view.value_or(default_view(kind));
  switch (kind) {
    case InteractionKind::Scrollbar:
      return std::make_unique<ScrollbarInteraction>(std::move(model), cfg, v);
    case InteractionKind::Dnd:
      return std::make_unique<DragInteraction>(std::move(model), cfg, v, false);
    case InteractionKind::Guides:
      return std::make_unique<DragInteraction>(std::move(model), cfg, v, true);
    case InteractionKind::Calendar:
      return std::make_unique<CalendarInteraction>(std::move(model), cfg, v);
  }
  throw UnknownInteraction("unknown interaction kind");
}

}  // namespace mdpc
