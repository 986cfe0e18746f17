#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mdpc {

inline constexpr double kDefaultMinDuration = 15.0;

// Times are minutes since the Monday epoch; intervals are half-open.
struct CalendarEvent {
  std::int64_t id = 0;
  double start = 0.0;
  double end = 0.0;
  std::string title;

  double duration() const { return end - start; }

  friend bool operator==(const CalendarEvent&, const CalendarEvent&) = default;
};

// Events overlapping [t0, t1), ordered by (start, id).
std::vector<CalendarEvent> select_visible(std::span<const CalendarEvent> events, double t0, double t1);

// Replaces start/end of event `id`. If the result is shorter than
// minDuration, the edge that moved is pinned minDuration away from the other
// one (the end, when both moved). Throws UnknownId.
void update_event(std::vector<CalendarEvent>& events, std::int64_t id, double newStart, double newEnd,
                  double minDuration = kDefaultMinDuration);

struct LayoutSlot {
  int index = 0;
  int count = 1;

  friend bool operator==(const LayoutSlot&, const LayoutSlot&) = default;
};

// Column sharing: connected components of the interval-overlap graph; each
// component of k events, ordered by (start, id), gets slots 0..k-1 of k.
std::map<std::int64_t, LayoutSlot> overlap_layout(std::span<const CalendarEvent> dayEvents);

class CalendarTable {
 public:
  CalendarTable() = default;
  explicit CalendarTable(std::vector<CalendarEvent> events, double minDuration = kDefaultMinDuration);

  const std::vector<CalendarEvent>& events() const { return events_; }
  double min_duration() const { return minDuration_; }
  const CalendarEvent& get(std::int64_t id) const;
  bool contains(std::int64_t id) const;

  void insert(CalendarEvent ev);
  std::vector<CalendarEvent> select_visible(double t0, double t1) const;
  void update_event(std::int64_t id, double newStart, double newEnd);

  friend bool operator==(const CalendarTable&, const CalendarTable&) = default;

 private:
  std::vector<CalendarEvent> events_;
  double minDuration_ = kDefaultMinDuration;
};

// Both values live on a 2^-32 grid; shifts keep the extent bit-for-bit.
struct ScrollbarModel {
  double low = 0.0;
  double high = 1.0;

  static ScrollbarModel make(double low, double high);
  double extent() const { return high - low; }
  bool valid() const { return 0.0 <= low && low <= high && high <= 1.0; }

  friend bool operator==(const ScrollbarModel&, const ScrollbarModel&) = default;
};

double quantize_fraction(double v);

// Translates both values by dv, clamped to [0, 1] with the extent unchanged.
ScrollbarModel scrollbar_shift(ScrollbarModel m, double dv);

struct DragObject {
  std::int64_t id = 0;
  double x = 0.0;  // center
  double y = 0.0;
  double w = 1.0;
  double h = 1.0;

  friend bool operator==(const DragObject&, const DragObject&) = default;
};

enum class Axis { Horizontal, Vertical };

struct Guide {
  std::int64_t id = 0;
  Axis axis = Axis::Horizontal;
  double pos = 0.0;

  friend bool operator==(const Guide&, const Guide&) = default;
};

// All conceptual models of a session. Each interaction manipulates its part.
struct ModelStore {
  CalendarTable calendar;
  ScrollbarModel scrollbar;
  std::vector<DragObject> objects;
  std::vector<Guide> guides;

  DragObject& object(std::int64_t id);
  const DragObject& object(std::int64_t id) const;

  // Throws InvalidModel when a type invariant does not hold.
  void check() const;

  friend bool operator==(const ModelStore&, const ModelStore&) = default;
};

// {"events":[{"id","start_min","end_min","title"}], "scrollbar":{"low","high"},
//  "objects":[{"id","x","y","w","h"}], "guides":[{"id","axis","pos"}]}
nlohmann::ordered_json to_json(const ModelStore& m);
ModelStore model_from_json(const nlohmann::json& j);
ModelStore load_model(const std::filesystem::path& path);
void save_model(const ModelStore& m, const std::filesystem::path& path);

}  // namespace mdpc
