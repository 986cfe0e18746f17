#include "mdpc/calendar_interaction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "mdpc/errors.hpp"

namespace mdpc {

std::string_view to_string(EventPart part) {
  switch (part) {
    case EventPart::Start: return "start";
    case EventPart::Move: return "move";
    case EventPart::End: return "end";
  }
  return "?";
}

std::string calendar_tag(std::int64_t id, EventPart part) {
  return std::string(kCalendarTagPrefix) + std::to_string(id) + "-" + std::string(to_string(part));
}

std::optional<PartTag> parse_calendar_tag(std::string_view tag) {
  if (!tag.starts_with(kCalendarTagPrefix)) {
    return std::nullopt;
  }
  tag.remove_prefix(kCalendarTagPrefix.size());
  const auto dash = tag.rfind('-');
  if (dash == std::string_view::npos || dash == 0) {
    return std::nullopt;
  }
  const std::string_view partText = tag.substr(dash + 1);
  PartTag out;
  if (partText == "start") {
    out.part = EventPart::Start;
  } else if (partText == "move") {
    out.part = EventPart::Move;
  } else if (partText == "end") {
    out.part = EventPart::End;
  } else {
    return std::nullopt;
  }
  const std::string_view idText = tag.substr(0, dash);
  const auto [ptr, ec] = std::from_chars(idText.data(), idText.data() + idText.size(), out.id);
  if (ec != std::errc{} || ptr != idText.data() + idText.size()) {
    return std::nullopt;
  }
  return out;
}

double snap_minutes(double t, double step) {
  if (step <= 0.0) {
    return t;
  }
  return std::round(t / step) * step;
}

std::vector<EventLayout> calendar_layout(std::span<const CalendarEvent> events, const ViewParams& view) {
  const double weekBegin = week_start(view.currentWeek);
  const double weekEnd = weekBegin + kMinutesPerWeek;

  struct Clipped {
    CalendarEvent interval;  // visible part, within one day
    int day;
  };
  std::vector<Clipped> clipped;
  std::map<int, std::vector<CalendarEvent>> byDay;
  for (const auto& ev : select_visible(events, weekBegin, weekEnd)) {
    const double s = std::max(ev.start, weekBegin);
    const int day = wrap(s).day;
    const double dayBegin = weekBegin + day * kMinutesPerDay;
    const double e = std::min(ev.end, dayBegin + kMinutesPerDay);
    CalendarEvent part{ev.id, s, e, ev.title};
    clipped.push_back({part, day});
    byDay[day].push_back(part);
  }
  std::map<int, std::map<std::int64_t, LayoutSlot>> slots;
  for (const auto& [day, dayEvents] : byDay) {
    slots[day] = overlap_layout(dayEvents);
  }

  std::vector<EventLayout> out;
  out.reserve(clipped.size());
  for (const auto& c : clipped) {
    const double dayBegin = weekBegin + c.day * kMinutesPerDay;
    const LayoutSlot slot = slots[c.day].at(c.interval.id);
    const Point topLeft = transf(c.interval.start, view);
    const double bottomFrac = (c.interval.end - dayBegin) / kMinutesPerDay;
    const double bottom = view.zoom * bottomFrac * view.cellHeight + view.panY;
    const double colW = view.zoom * view.cellWidth / slot.count;
    const double x = topLeft.x + slot.index * colW;

    EventLayout l;
    l.id = c.interval.id;
    l.day = c.day;
    l.slot = slot;
    l.rect = {x, topLeft.y, colW, bottom - topLeft.y};
    const double hh = std::min(kMaxHandleHeight, kHandleFraction * l.rect.h);
    const double y1 = topLeft.y + hh;
    const double y2 = bottom - hh;
    l.startHandle = {x, topLeft.y, colW, y1 - topLeft.y};
    l.body = {x, y1, colW, y2 - y1};
    l.endHandle = {x, y2, colW, bottom - y2};
    out.push_back(l);
  }
  return out;
}

namespace {

constexpr const char* kDayNames[] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};

}  // namespace

std::pair<std::vector<DrawCmd>, std::vector<PickObject>> calendar_build_views(
    std::span<const CalendarEvent> events, const ViewParams& view, const InteractionConfig&) {
  std::vector<DrawCmd> display;
  const double gridTop = view.panY;
  const double gridBottom = view.zoom * view.cellHeight + view.panY;
  for (int day = 0; day <= kDaysPerWeek; ++day) {
    const double x = view.zoom * day * view.cellWidth + view.panX;
    DrawCmd line;
    line.geom = LineGeom{x, gridTop, x, gridBottom, 1};
    line.fill = "#cccccc";
    line.tag = "grid-col-" + std::to_string(day);
    display.push_back(std::move(line));
    if (day < kDaysPerWeek) {
      DrawCmd label;
      label.geom = TextGeom{x + 4, gridTop + 14, kDayNames[day], 12};
      label.fill = "#555555";
      label.tag = "grid-day-" + std::to_string(day);
      display.push_back(std::move(label));
    }
  }
  for (int hour = 1; hour < 24; ++hour) {
    const double y = view.zoom * (hour / 24.0) * view.cellHeight + view.panY;
    DrawCmd line;
    line.geom = LineGeom{view.panX, y, view.zoom * kDaysPerWeek * view.cellWidth + view.panX, y, 1};
    line.fill = "#eeeeee";
    line.tag = "grid-hour-" + std::to_string(hour);
    display.push_back(std::move(line));
  }

  std::vector<PickObject> picking;
  const auto layout = calendar_layout(events, view);
  for (const auto& l : layout) {
    DrawCmd rect;
    rect.geom = RectGeom{l.rect.x, l.rect.y, l.rect.w, l.rect.h};
    rect.fill = "#7986cb";
    rect.z = 1;
    rect.tag = "cal-ev-" + std::to_string(l.id);
    display.push_back(std::move(rect));

    const auto title = std::find_if(events.begin(), events.end(), [&](const CalendarEvent& e) { return e.id == l.id; });
    DrawCmd text;
    text.geom = TextGeom{l.rect.x + 3, l.rect.y + 12, title->title, 11};
    text.fill = "#ffffff";
    text.z = 2;
    text.tag = "cal-ev-" + std::to_string(l.id) + "-title";
    display.push_back(std::move(text));

    const std::pair<EventPart, Rect> parts[] = {
        {EventPart::Start, l.startHandle}, {EventPart::Move, l.body}, {EventPart::End, l.endHandle}};
    for (const auto& [part, r] : parts) {
      if (r.empty()) {
        continue;
      }
      PickObject p;
      p.shape = r;
      p.tag = calendar_tag(l.id, part);
      picking.push_back(std::move(p));
    }
  }
  return {std::move(display), std::move(picking)};
}

CalendarInteraction::CalendarInteraction(ModelStore model, InteractionConfig cfg, ViewParams view)
    : Interaction(InteractionKind::Calendar, "idle", std::move(model), cfg, view) {
  build_machine();
}

void CalendarInteraction::build_machine() {
  machine_.add_state("idle").add_state("dragging");
  machine_.add_transition("idle", {"press", Pattern::on_prefix(EventKind::Press, std::string(kCalendarTagPrefix)),
                                   "dragging", {}, [this](const Event& e) { on_press(e); }});
  machine_.add_transition("dragging", {"move", Pattern::on(EventKind::Move), "dragging", {},
                                       [this](const Event& e) { on_move(e); }});
  machine_.add_transition("dragging", {"release", Pattern::on(EventKind::Release), "idle", {},
                                       [this](const Event&) { grab_.reset(); }});
  machine_.validate();
}

void CalendarInteraction::on_press(const Event& e) {
  const auto tag = parse_calendar_tag(e.tag);
  if (!tag) {
    throw UnknownId("malformed calendar tag '" + e.tag + "'");
  }
  const CalendarEvent& ev = model().calendar.get(tag->id);
  const double edge = tag->part == EventPart::End ? ev.end : ev.start;
  grab_ = Grab{tag->id, tag->part, invtransf(e.p, view()) - edge, ev.duration()};
}

void CalendarInteraction::on_move(const Event& e) {
  CalendarTable& table = mutable_model().calendar;
  const CalendarEvent ev = table.get(grab_->id);
  const double t = invtransf(e.p, view()) - grab_->offset;
  const double step = cfg_.snapMinutes;
  switch (grab_->part) {
    case EventPart::Move: {
      const double start = snap_minutes(t, step);
      table.update_event(ev.id, start, start + grab_->duration);
      break;
    }
    case EventPart::Start:
      table.update_event(ev.id, std::min(snap_minutes(t, step), ev.end - table.min_duration()), ev.end);
      break;
    case EventPart::End:
      table.update_event(ev.id, ev.start, std::max(snap_minutes(t, step), ev.start + table.min_duration()));
      break;
  }
}

std::vector<DrawCmd> CalendarInteraction::display_view() const {
  return calendar_build_views(model().calendar.events(), view(), cfg_).first;
}

std::vector<PickObject> CalendarInteraction::picking_view() const {
  return calendar_build_views(model().calendar.events(), view(), cfg_).second;
}

}  // namespace mdpc
