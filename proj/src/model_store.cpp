#include "mdpc/model_store.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "mdpc/errors.hpp"

namespace mdpc {

namespace {

bool by_start_then_id(const CalendarEvent& a, const CalendarEvent& b) {
  return a.start != b.start ? a.start < b.start : a.id < b.id;
}

std::vector<CalendarEvent>::iterator find_event(std::vector<CalendarEvent>& events, std::int64_t id) {
  return std::find_if(events.begin(), events.end(), [id](const CalendarEvent& e) { return e.id == id; });
}

}  // namespace

std::vector<CalendarEvent> select_visible(std::span<const CalendarEvent> events, double t0, double t1) {
  std::vector<CalendarEvent> out;
  for (const auto& e : events) {
    if (e.start < t1 && e.end > t0) {
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), by_start_then_id);
  return out;
}

void update_event(std::vector<CalendarEvent>& events, std::int64_t id, double newStart, double newEnd,
                  double minDuration) {
  auto it = find_event(events, id);
  if (it == events.end()) {
    throw UnknownId("no calendar event with id " + std::to_string(id));
  }
  if (newEnd - newStart < minDuration) {
    const bool startMoved = newStart != it->start;
    const bool endMoved = newEnd != it->end;
    if (startMoved && !endMoved) {
      newStart = newEnd - minDuration;
    } else {
      newEnd = newStart + minDuration;
    }
  }
  it->start = newStart;
  it->end = newEnd;
}

std::map<std::int64_t, LayoutSlot> overlap_layout(std::span<const CalendarEvent> dayEvents) {
  std::vector<CalendarEvent> sorted(dayEvents.begin(), dayEvents.end());
  std::sort(sorted.begin(), sorted.end(), by_start_then_id);

  std::map<std::int64_t, LayoutSlot> out;
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    // Sweep: the component grows while the next start is before the
    // furthest end seen so far.
    double reach = sorted[begin].end;
    std::size_t end = begin + 1;
    while (end < sorted.size() && sorted[end].start < reach) {
      reach = std::max(reach, sorted[end].end);
      ++end;
    }
    const int count = static_cast<int>(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      out[sorted[i].id] = {static_cast<int>(i - begin), count};
    }
    begin = end;
  }
  return out;
}

CalendarTable::CalendarTable(std::vector<CalendarEvent> events, double minDuration)
    : events_(std::move(events)), minDuration_(minDuration) {}

const CalendarEvent& CalendarTable::get(std::int64_t id) const {
  auto it = std::find_if(events_.begin(), events_.end(), [id](const CalendarEvent& e) { return e.id == id; });
  if (it == events_.end()) {
    throw UnknownId("no calendar event with id " + std::to_string(id));
  }
  return *it;
}

bool CalendarTable::contains(std::int64_t id) const {
  return std::any_of(events_.begin(), events_.end(), [id](const CalendarEvent& e) { return e.id == id; });
}

void CalendarTable::insert(CalendarEvent ev) {
  if (contains(ev.id)) {
    throw InvalidModel("duplicate calendar event id " + std::to_string(ev.id));
  }
  events_.push_back(std::move(ev));
}

std::vector<CalendarEvent> CalendarTable::select_visible(double t0, double t1) const {
  return mdpc::select_visible(events_, t0, t1);
}

void CalendarTable::update_event(std::int64_t id, double newStart, double newEnd) {
  mdpc::update_event(events_, id, newStart, newEnd, minDuration_);
}

double quantize_fraction(double v) {
  constexpr double kGrid = 4294967296.0;  // 2^32
  return std::round(v * kGrid) / kGrid;
}

ScrollbarModel ScrollbarModel::make(double low, double high) {
  ScrollbarModel m{quantize_fraction(low), quantize_fraction(high)};
  if (!m.valid()) {
    throw InvalidModel("scrollbar values must satisfy 0 <= low <= high <= 1");
  }
  return m;
}

ScrollbarModel scrollbar_shift(ScrollbarModel m, double dv) {
  // Grid values: every sum and difference below is exact.
  const double extent = m.high - m.low;
  const double low = std::clamp(m.low + quantize_fraction(dv), 0.0, 1.0 - extent);
  return {low, low + extent};
}

DragObject& ModelStore::object(std::int64_t id) {
  auto it = std::find_if(objects.begin(), objects.end(), [id](const DragObject& o) { return o.id == id; });
  if (it == objects.end()) {
    throw UnknownId("no object with id " + std::to_string(id));
  }
  return *it;
}

const DragObject& ModelStore::object(std::int64_t id) const {
  return const_cast<ModelStore*>(this)->object(id);
}

void ModelStore::check() const {
  for (const auto& e : calendar.events()) {
    if (!(e.end - e.start >= calendar.min_duration())) {
      throw InvalidModel("calendar event " + std::to_string(e.id) + " is shorter than the minimum duration");
    }
  }
  if (!scrollbar.valid()) {
    throw InvalidModel("scrollbar values must satisfy 0 <= low <= high <= 1");
  }
  for (const auto& o : objects) {
    if (!(o.w > 0 && o.h > 0)) {
      throw InvalidModel("object " + std::to_string(o.id) + " must have a positive size");
    }
  }
}

namespace {

// Integral minute values are written as integers.
nlohmann::ordered_json minutes(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw InvalidModel(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidModel(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

nlohmann::ordered_json to_json(const ModelStore& m) {
  nlohmann::ordered_json j;
  j["events"] = nlohmann::ordered_json::array();
  for (const auto& e : m.calendar.events()) {
    nlohmann::ordered_json ev;
    ev["id"] = e.id;
    ev["start_min"] = minutes(e.start);
    ev["end_min"] = minutes(e.end);
    ev["title"] = e.title;
    j["events"].push_back(std::move(ev));
  }
  if (m.calendar.min_duration() != kDefaultMinDuration) {
    j["min_duration"] = m.calendar.min_duration();
  }
  j["scrollbar"] = {{"low", m.scrollbar.low}, {"high", m.scrollbar.high}};
  j["objects"] = nlohmann::ordered_json::array();
  for (const auto& o : m.objects) {
    j["objects"].push_back({{"id", o.id}, {"x", o.x}, {"y", o.y}, {"w", o.w}, {"h", o.h}});
  }
  j["guides"] = nlohmann::ordered_json::array();
  for (const auto& g : m.guides) {
    j["guides"].push_back(
        {{"id", g.id}, {"axis", g.axis == Axis::Horizontal ? "horizontal" : "vertical"}, {"pos", g.pos}});
  }
  return j;
}

ModelStore model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InvalidModel("model must be a JSON object");
  }
  ModelStore m;
  const double minDuration = j.contains("min_duration") ? field<double>(j, "min_duration") : kDefaultMinDuration;
  std::vector<CalendarEvent> events;
  if (j.contains("events")) {
    for (const auto& e : j.at("events")) {
      events.push_back({field<std::int64_t>(e, "id"), field<double>(e, "start_min"), field<double>(e, "end_min"),
                        e.contains("title") ? field<std::string>(e, "title") : std::string{}});
    }
  }
  CalendarTable table({}, minDuration);
  for (auto& e : events) {
    table.insert(std::move(e));
  }
  m.calendar = std::move(table);
  if (j.contains("scrollbar")) {
    const auto& s = j.at("scrollbar");
    m.scrollbar = ScrollbarModel::make(field<double>(s, "low"), field<double>(s, "high"));
  }
  if (j.contains("objects")) {
    for (const auto& o : j.at("objects")) {
      m.objects.push_back({field<std::int64_t>(o, "id"), field<double>(o, "x"), field<double>(o, "y"),
                           field<double>(o, "w"), field<double>(o, "h")});
    }
  }
  if (j.contains("guides")) {
    for (const auto& g : j.at("guides")) {
      const auto axis = field<std::string>(g, "axis");
      if (axis != "horizontal" && axis != "vertical") {
        throw InvalidModel("guide axis must be 'horizontal' or 'vertical'");
      }
      m.guides.push_back({field<std::int64_t>(g, "id"), axis == "horizontal" ? Axis::Horizontal : Axis::Vertical,
                          field<double>(g, "pos")});
    }
  }
  m.check();
  return m;
}

ModelStore load_model(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) {
    throw InvalidModel("cannot open model file " + path.string());
  }
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidModel("model file " + path.string() + " is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

void save_model(const ModelStore& m, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  f << to_json(m).dump(2) << "\n";
}

}  // namespace mdpc
