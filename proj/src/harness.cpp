#include "mdpc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "mdpc/errors.hpp"

namespace mdpc {

std::string_view to_string(RecordType type) {
  switch (type) {
    case RecordType::Press: return "press";
    case RecordType::Move: return "move";
    case RecordType::Release: return "release";
    case RecordType::Wheel: return "wheel";
    case RecordType::Resize: return "resize";
    case RecordType::SetView: return "set_view";
  }
  return "?";
}

namespace {

RecordType parse_type(const std::string& s, std::size_t line) {
  if (s == "press") return RecordType::Press;
  if (s == "move") return RecordType::Move;
  if (s == "release") return RecordType::Release;
  if (s == "wheel") return RecordType::Wheel;
  if (s == "resize") return RecordType::Resize;
  if (s == "set_view") return RecordType::SetView;
  throw MalformedTrace(line, "unknown record type '" + s + "'");
}

double number(const nlohmann::json& j, const char* key, std::size_t line) {
  if (!j.contains(key)) {
    throw MalformedTrace(line, std::string("missing field '") + key + "'");
  }
  const auto& v = j.at(key);
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    throw MalformedTrace(line, std::string("field '") + key + "' must be a finite number");
  }
  return v.get<double>();
}

std::optional<double> optional_number(const nlohmann::json& j, const char* key, std::size_t line) {
  if (!j.contains(key)) {
    return std::nullopt;
  }
  return number(j, key, line);
}

}  // namespace

TraceRecord parse_record(const nlohmann::json& j, std::size_t line) {
  if (!j.is_object()) {
    throw MalformedTrace(line, "record must be a JSON object");
  }
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw MalformedTrace(line, "missing string field 'type'");
  }
  TraceRecord r;
  r.type = parse_type(j.at("type").get<std::string>(), line);
  if (j.contains("seq")) {
    if (!j.at("seq").is_number_integer()) {
      throw MalformedTrace(line, "field 'seq' must be an integer");
    }
    r.seq = j.at("seq").get<std::int64_t>();
  }
  switch (r.type) {
    case RecordType::Press:
    case RecordType::Move:
    case RecordType::Release:
      r.x = number(j, "x", line);
      r.y = number(j, "y", line);
      if (j.contains("button")) {
        if (!j.at("button").is_number_integer()) {
          throw MalformedTrace(line, "field 'button' must be an integer");
        }
        r.button = j.at("button").get<int>();
      }
      break;
    case RecordType::Wheel:
      r.x = number(j, "x", line);
      r.y = number(j, "y", line);
      r.delta = number(j, "delta", line);
      break;
    case RecordType::Resize:
      r.w = number(j, "w", line);
      r.h = number(j, "h", line);
      if (!(r.w >= 1 && r.h >= 1)) {
        throw MalformedTrace(line, "resize needs w >= 1 and h >= 1");
      }
      break;
    case RecordType::SetView:
      if (j.contains("week")) {
        if (!j.at("week").is_number_integer()) {
          throw MalformedTrace(line, "field 'week' must be an integer");
        }
        r.week = j.at("week").get<std::int64_t>();
      }
      r.zoom = optional_number(j, "zoom", line);
      r.panX = optional_number(j, "pan_x", line);
      r.panY = optional_number(j, "pan_y", line);
      r.cellWidth = optional_number(j, "cell_width", line);
      r.cellHeight = optional_number(j, "cell_height", line);
      r.rotationDeg = optional_number(j, "rotation_deg", line);
      if ((r.zoom && *r.zoom <= 0) || (r.cellWidth && *r.cellWidth <= 0) || (r.cellHeight && *r.cellHeight <= 0)) {
        throw MalformedTrace(line, "zoom and cell sizes must be positive");
      }
      break;
  }
  return r;
}

nlohmann::ordered_json to_json(const TraceRecord& r) {
  nlohmann::ordered_json j;
  j["seq"] = r.seq;
  j["type"] = to_string(r.type);
  switch (r.type) {
    case RecordType::Press:
    case RecordType::Move:
    case RecordType::Release:
      j["x"] = r.x;
      j["y"] = r.y;
      j["button"] = r.button;
      break;
    case RecordType::Wheel:
      j["x"] = r.x;
      j["y"] = r.y;
      j["delta"] = r.delta;
      break;
    case RecordType::Resize:
      j["w"] = r.w;
      j["h"] = r.h;
      break;
    case RecordType::SetView:
      if (r.week) j["week"] = *r.week;
      if (r.zoom) j["zoom"] = *r.zoom;
      if (r.panX) j["pan_x"] = *r.panX;
      if (r.panY) j["pan_y"] = *r.panY;
      if (r.cellWidth) j["cell_width"] = *r.cellWidth;
      if (r.cellHeight) j["cell_height"] = *r.cellHeight;
      if (r.rotationDeg) j["rotation_deg"] = *r.rotationDeg;
      break;
  }
  return j;
}

std::vector<TraceRecord> parse_trace(std::istream& in) {
  std::vector<TraceRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedTrace(line, std::string("invalid JSON: ") + e.what());
    }
    TraceRecord r = parse_record(j, line);
    if (!j.contains("seq")) {
      r.seq = out.empty() ? 1 : out.back().seq + 1;
    }
    if (!out.empty() && r.seq <= out.back().seq) {
      throw MalformedTrace(line, "seq " + std::to_string(r.seq) + " is not greater than " +
                                     std::to_string(out.back().seq));
    }
    out.push_back(r);
  }
  return out;
}

std::vector<TraceRecord> load_trace(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) {
    throw Error("cannot open trace file " + path.string());
  }
  return parse_trace(f);
}

void save_trace(std::span<const TraceRecord> trace, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  for (const auto& r : trace) {
    f << to_json(r).dump() << "\n";
  }
}

std::vector<Expectation> parse_expectations(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw MalformedTrace(0, "expectations must be a JSON array");
  }
  std::vector<Expectation> out;
  std::size_t index = 0;
  for (const auto& e : j) {
    ++index;
    if (!e.is_object() || !e.contains("after_seq") || !e.at("after_seq").is_number_integer()) {
      throw MalformedTrace(index, "expectation needs an integer 'after_seq'");
    }
    Expectation x;
    x.afterSeq = e.at("after_seq").get<std::int64_t>();
    if (e.contains("model")) {
      x.kind = Expectation::Kind::Model;
      x.model = e.at("model");
    } else if (e.contains("state")) {
      x.kind = Expectation::Kind::State;
      if (!e.at("state").is_string()) {
        throw MalformedTrace(index, "'state' must be a string");
      }
      x.state = e.at("state").get<std::string>();
    } else if (e.contains("pick")) {
      x.kind = Expectation::Kind::Pick;
      const auto& p = e.at("pick");
      x.at = {number(p, "x", index), number(p, "y", index)};
      if (p.contains("id")) {
        x.id = p.at("id").get<PickId>();
      }
      if (p.contains("tag")) {
        x.tag = p.at("tag").get<std::string>();
      }
      if (!x.id && !x.tag) {
        throw MalformedTrace(index, "pick expectation needs 'id' or 'tag'");
      }
    } else {
      throw MalformedTrace(index, "expectation needs one of 'model', 'state' or 'pick'");
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Expectation> load_expectations(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) {
    throw Error("cannot open expectations file " + path.string());
  }
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedTrace(0, std::string("expectations file is not valid JSON: ") + e.what());
  }
  return parse_expectations(j);
}

std::vector<std::string> json_diff(const nlohmann::json& expected, const nlohmann::json& actual, double tolerance,
                                   const std::string& path) {
  const std::string where = path.empty() ? "/" : path;
  if (expected.is_number() && actual.is_number()) {
    const double a = expected.get<double>();
    const double b = actual.get<double>();
    if (std::abs(a - b) > tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << where << ": expected " << a << ", got " << b;
      return {os.str()};
    }
    return {};
  }
  if (expected.is_object() && actual.is_object()) {
    std::vector<std::string> out;
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) {
        out.push_back(path + "/" + key + ": missing");
        continue;
      }
      auto sub = json_diff(value, actual.at(key), tolerance, path + "/" + key);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (expected.is_array() && actual.is_array()) {
    const auto has_id = [](const nlohmann::json& e) { return e.is_object() && e.contains("id"); };
    if (!expected.empty() && std::all_of(expected.begin(), expected.end(), has_id)) {
      // Records with ids match by id.
      std::vector<std::string> out;
      for (const auto& e : expected) {
        const auto it = std::find_if(actual.begin(), actual.end(),
                                     [&](const nlohmann::json& a) { return has_id(a) && a.at("id") == e.at("id"); });
        const std::string sub = path + "[id=" + e.at("id").dump() + "]";
        if (it == actual.end()) {
          out.push_back(sub + ": missing");
          continue;
        }
        auto diffs = json_diff(e, *it, tolerance, sub);
        out.insert(out.end(), diffs.begin(), diffs.end());
      }
      return out;
    }
    if (expected.size() != actual.size()) {
      return {where + ": expected " + std::to_string(expected.size()) + " elements, got " +
              std::to_string(actual.size())};
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      auto sub = json_diff(expected[i], actual[i], tolerance, path + "/" + std::to_string(i));
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (expected != actual) {
    return {where + ": expected " + expected.dump() + ", got " + actual.dump()};
  }
  return {};
}

Driver::Driver(std::unique_ptr<Interaction> interaction) : interaction_(std::move(interaction)) {}

void Driver::set_extra_stages(std::vector<PlaneStage> stages) {
  for (const auto& s : stages) {
    invert_stage(s);  // throws SingularTransform for degenerate stages
  }
  extra_ = std::move(stages);
  view_changed();
}

const FrameOutput& Driver::frame() {
  if (dirty_) {
    frame_ = render_frame(*interaction_, extra_, ++frameSeq_);
    dirty_ = false;
  }
  return frame_;
}

void Driver::reset(ModelStore model) {
  interaction_->reset(std::move(model));
  hover_ = kBackgroundId;
  hoverTag_.clear();
  lastScreen_.reset();
  dirty_ = true;
}

void Driver::dispatch(const Event& e) {
  if (interaction_->machine().dispatch(e)) {
    dirty_ = true;
  }
}

void Driver::cross(PickId id, const std::string& tag, Point scene, Point screen, int button) {
  if (tag == hoverTag_) {
    hover_ = id;
    return;
  }
  const std::string previous = hoverTag_;
  for (const auto& c : synthesize_crossings(hover_, id)) {
    Event e{c.kind == CrossingKind::Enter ? EventKind::Enter : EventKind::Leave, scene, button,
            c.kind == CrossingKind::Enter ? tag : previous, screen};
    dispatch(e);
  }
  hover_ = id;
  hoverTag_ = tag;
}

void Driver::settle(Point scene, Point screen, int button) {
  // The picking view may have changed under a stationary cursor.
  for (int i = 0; i < 4; ++i) {
    const FrameOutput& f = frame();
    const PickId id = pick(f.pickBuffer, screen);
    const std::string tag(f.tag_of(id));
    if (tag == hoverTag_) {
      hover_ = id;
      return;
    }
    cross(id, tag, scene, screen, button);
  }
}

void Driver::pointer(EventKind kind, Point screen, int button) {
  const auto stages = screen_stages(*interaction_, extra_);
  const Point scene = pipeline_inverse(screen, stages);
  const FrameOutput& f = frame();
  const PickId id = pick(f.pickBuffer, screen);
  const std::string tag(f.tag_of(id));
  cross(id, tag, scene, screen, button);
  dispatch(Event{kind, scene, button, tag, screen});
  settle(scene, screen, button);
  lastScreen_ = screen;
  lastButton_ = button;
}

void Driver::view_changed() {
  dirty_ = true;
  if (lastScreen_) {
    const Point scene = pipeline_inverse(*lastScreen_, screen_stages(*interaction_, extra_));
    settle(scene, *lastScreen_, lastButton_);
  }
}

void Driver::apply(const TraceRecord& r) {
  switch (r.type) {
    case RecordType::Press:
      pointer(EventKind::Press, {r.x, r.y}, r.button);
      return;
    case RecordType::Move:
      pointer(EventKind::Move, {r.x, r.y}, r.button);
      return;
    case RecordType::Release:
      pointer(EventKind::Release, {r.x, r.y}, r.button);
      return;
    case RecordType::Wheel: {
      const Point screen{r.x, r.y};
      dispatch(Event{EventKind::Wheel, pipeline_inverse(screen, screen_stages(*interaction_, extra_)), 0, {}, screen});
      // Zoom about the cursor: the point under it stays put.
      ViewParams v = interaction_->view();
      const Point q = pipeline_inverse(screen, extra_);
      const double factor = std::pow(1.1, r.delta);
      v.panX = q.x - (q.x - v.panX) * factor;
      v.panY = q.y - (q.y - v.panY) * factor;
      v.zoom *= factor;
      interaction_->set_view(v);
      view_changed();
      return;
    }
    case RecordType::Resize: {
      ViewParams v = interaction_->view();
      v.resize(r.w, r.h);
      interaction_->set_view(v);
      dispatch(Event{EventKind::Resize, {r.w, r.h}, 0, {}, {r.w, r.h}});
      view_changed();
      return;
    }
    case RecordType::SetView: {
      ViewParams v = interaction_->view();
      if (r.week) v.currentWeek = *r.week;
      if (r.zoom) v.zoom = *r.zoom;
      if (r.panX) v.panX = *r.panX;
      if (r.panY) v.panY = *r.panY;
      if (r.cellWidth) v.cellWidth = *r.cellWidth;
      if (r.cellHeight) v.cellHeight = *r.cellHeight;
      interaction_->set_view(v);
      if (r.rotationDeg) {
        std::vector<PlaneStage> stages;
        if (*r.rotationDeg != 0.0) {
          stages.push_back(RotateStage{*r.rotationDeg * std::numbers::pi / 180.0, v.windowW / 2, v.windowH / 2});
        }
        set_extra_stages(std::move(stages));
      }
      view_changed();
      return;
    }
  }
}

bool ReplayReport::passed() const {
  return std::all_of(expectations.begin(), expectations.end(), [](const ExpectationResult& r) { return r.pass; });
}

nlohmann::ordered_json ReplayReport::to_json() const {
  nlohmann::ordered_json j;
  j["interaction"] = interaction;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  j["records"] = records;
  j["passed"] = passed();
  j["final_state"] = finalState;
  j["model"] = model;
  j["notifications"] = nlohmann::ordered_json::array();
  for (const auto& n : notifications) {
    j["notifications"].push_back({{"kind", n.kind}, {"id", n.id}});
  }
  j["expectations"] = nlohmann::ordered_json::array();
  for (const auto& e : expectations) {
    j["expectations"].push_back({{"after_seq", e.afterSeq}, {"kind", e.kind}, {"pass", e.pass}, {"detail", e.detail}});
  }
  return j;
}

namespace {

ExpectationResult evaluate(Driver& driver, const Expectation& x) {
  ExpectationResult r;
  r.afterSeq = x.afterSeq;
  switch (x.kind) {
    case Expectation::Kind::State: {
      r.kind = "state";
      const auto& actual = driver.interaction().machine().current();
      r.pass = actual == x.state;
      r.detail = r.pass ? actual : "expected state '" + x.state + "', got '" + actual + "'";
      break;
    }
    case Expectation::Kind::Model: {
      r.kind = "model";
      const auto diffs = json_diff(x.model, nlohmann::json(to_json(driver.interaction().model())));
      r.pass = diffs.empty();
      for (const auto& d : diffs) {
        r.detail += (r.detail.empty() ? "" : "; ") + d;
      }
      break;
    }
    case Expectation::Kind::Pick: {
      r.kind = "pick";
      const FrameOutput& f = driver.frame();
      const PickId id = pick(f.pickBuffer, x.at);
      const std::string tag(f.tag_of(id));
      r.pass = (!x.id || *x.id == id) && (!x.tag || *x.tag == tag);
      r.detail = "id " + std::to_string(id) + " tag '" + tag + "'";
      break;
    }
  }
  return r;
}

}  // namespace

ReplayReport replay(Driver& driver, std::span<const TraceRecord> trace, std::span<const Expectation> expectations,
                    std::optional<std::uint64_t> seed) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].seq <= trace[i - 1].seq) {
      throw MalformedTrace(i + 1, "seq " + std::to_string(trace[i].seq) + " is not greater than " +
                                      std::to_string(trace[i - 1].seq));
    }
  }
  for (std::size_t i = 0; i < expectations.size(); ++i) {
    const auto seq = expectations[i].afterSeq;
    if (std::none_of(trace.begin(), trace.end(), [seq](const TraceRecord& r) { return r.seq == seq; })) {
      throw MalformedTrace(i + 1, "expectation references seq " + std::to_string(seq) + " which is not in the trace");
    }
  }

  ReplayReport report;
  report.interaction = std::string(to_string(driver.interaction().kind()));
  report.seed = seed;
  report.records = trace.size();
  for (const auto& r : trace) {
    driver.apply(r);
    for (const auto& x : expectations) {
      if (x.afterSeq == r.seq) {
        report.expectations.push_back(evaluate(driver, x));
      }
    }
  }
  report.finalState = driver.interaction().machine().current();
  report.model = to_json(driver.interaction().model());
  report.notifications = driver.interaction().notifications();
  return report;
}

ReplayReport replay(InteractionKind kind, ModelStore model, std::span<const TraceRecord> trace,
                    std::span<const Expectation> expectations, const InteractionConfig& cfg,
                    std::optional<std::uint64_t> seed) {
  Driver driver(make_interaction(kind, std::move(model), cfg));
  return replay(driver, trace, expectations, seed);
}

std::vector<TraceRecord> random_trace(std::uint64_t seed, std::size_t gestures, double windowW, double windowH) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, windowW);
  std::uniform_real_distribution<double> uy(0.0, windowH);
  std::uniform_int_distribution<int> steps(0, 8);
  std::normal_distribution<double> jitter(0.0, 12.0);
  std::vector<TraceRecord> out;
  std::int64_t seq = 0;
  for (std::size_t g = 0; g < gestures; ++g) {
    Point p{std::round(ux(rng)), std::round(uy(rng))};
    out.push_back(TraceRecord::pointer(++seq, RecordType::Move, p.x, p.y));
    out.push_back(TraceRecord::pointer(++seq, RecordType::Press, p.x, p.y));
    const int n = steps(rng);
    for (int i = 0; i < n; ++i) {
      p.x = std::clamp(std::round(p.x + jitter(rng)), 0.0, windowW - 1);
      p.y = std::clamp(std::round(p.y + jitter(rng)), 0.0, windowH - 1);
      out.push_back(TraceRecord::pointer(++seq, RecordType::Move, p.x, p.y));
    }
    out.push_back(TraceRecord::pointer(++seq, RecordType::Release, p.x, p.y));
  }
  return out;
}

}  // namespace mdpc
