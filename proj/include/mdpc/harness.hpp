#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdpc/interaction.hpp"
#include "mdpc/renderloop.hpp"

namespace mdpc {

enum class RecordType { Press, Move, Release, Wheel, Resize, SetView };

std::string_view to_string(RecordType type);

struct TraceRecord {
  std::int64_t seq = 0;
  RecordType type = RecordType::Move;
  double x = 0.0;
  double y = 0.0;
  int button = 1;
  double delta = 0.0;  // wheel notches, positive zooms in
  double w = 0.0;      // resize
  double h = 0.0;
  // set_view; unset fields keep their value.
  std::optional<std::int64_t> week;
  std::optional<double> zoom;
  std::optional<double> panX;
  std::optional<double> panY;
  std::optional<double> cellWidth;
  std::optional<double> cellHeight;
  std::optional<double> rotationDeg;  // around the window center

  static TraceRecord pointer(std::int64_t seq, RecordType type, double x, double y, int button = 1) {
    TraceRecord r;
    r.seq = seq;
    r.type = type;
    r.x = x;
    r.y = y;
    r.button = button;
    return r;
  }
};

// One JSON object, e.g. {"seq":1,"type":"press","x":10,"y":20,"button":1}.
// A missing seq is left at 0 for the caller to fill in. `line` is only used
// in error messages. Throws MalformedTrace.
TraceRecord parse_record(const nlohmann::json& j, std::size_t line);
nlohmann::ordered_json to_json(const TraceRecord& r);

// JSON Lines; blank lines are skipped. Missing seqs continue from the
// previous record; seqs must be strictly increasing.
std::vector<TraceRecord> parse_trace(std::istream& in);
std::vector<TraceRecord> load_trace(const std::filesystem::path& path);
void save_trace(std::span<const TraceRecord> trace, const std::filesystem::path& path);

struct Expectation {
  enum class Kind { Model, State, Pick };

  std::int64_t afterSeq = 0;
  Kind kind = Kind::State;
  nlohmann::json model;  // Kind::Model: subset of the model snapshot
  std::string state;     // Kind::State
  Point at;              // Kind::Pick, screen coordinates
  std::optional<PickId> id;
  std::optional<std::string> tag;
};

// JSON array of {"after_seq":n, "state":"..."} | {"after_seq":n,"model":{...}}
// | {"after_seq":n,"pick":{"x":..,"y":..,"id":n | "tag":".."}}.
std::vector<Expectation> parse_expectations(const nlohmann::json& j);
std::vector<Expectation> load_expectations(const std::filesystem::path& path);

// Differences between `expected` (possibly a subset) and `actual`; numbers
// compare within `tolerance`. Arrays whose expected elements all carry an
// "id" are matched by id, other arrays by position.
std::vector<std::string> json_diff(const nlohmann::json& expected, const nlohmann::json& actual,
                                   double tolerance = 1e-6, const std::string& path = "");

// The one input path shared by trace replay and live sessions:
// pointer sample -> pick under cursor -> Enter/Leave synthesis -> machine,
// then re-render and re-pick until the picking view under the cursor is
// stable.
class Driver {
 public:
  explicit Driver(std::unique_ptr<Interaction> interaction);

  Interaction& interaction() { return *interaction_; }
  const Interaction& interaction() const { return *interaction_; }

  // Extra plane stages appended after the interaction's own view stages.
  void set_extra_stages(std::vector<PlaneStage> stages);
  const std::vector<PlaneStage>& extra_stages() const { return extra_; }

  void apply(const TraceRecord& r);
  void pointer(EventKind kind, Point screen, int button = 1);

  // Current frame, rendered on demand when the model or view changed.
  const FrameOutput& frame();
  std::uint64_t frames_rendered() const { return frameSeq_; }
  void invalidate() { dirty_ = true; }

  // Resets model, machine and hover state.
  void reset(ModelStore model);

 private:
  void dispatch(const Event& e);
  void cross(PickId id, const std::string& tag, Point scene, Point screen, int button);
  void settle(Point scene, Point screen, int button);
  void view_changed();

  std::unique_ptr<Interaction> interaction_;
  std::vector<PlaneStage> extra_;
  FrameOutput frame_;
  std::uint64_t frameSeq_ = 0;
  bool dirty_ = true;
  PickId hover_ = kBackgroundId;
  std::string hoverTag_;
  std::optional<Point> lastScreen_;
  int lastButton_ = 1;
};

struct ExpectationResult {
  std::int64_t afterSeq = 0;
  std::string kind;
  bool pass = false;
  std::string detail;
};

struct ReplayReport {
  std::string interaction;
  std::optional<std::uint64_t> seed;
  std::size_t records = 0;
  std::string finalState;
  nlohmann::ordered_json model;
  std::vector<Notification> notifications;
  std::vector<ExpectationResult> expectations;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

// Throws MalformedTrace on non-increasing seqs or expectations that name a
// seq absent from the trace.
ReplayReport replay(Driver& driver, std::span<const TraceRecord> trace, std::span<const Expectation> expectations,
                    std::optional<std::uint64_t> seed = std::nullopt);

ReplayReport replay(InteractionKind kind, ModelStore model, std::span<const TraceRecord> trace,
                    std::span<const Expectation> expectations, const InteractionConfig& cfg = {},
                    std::optional<std::uint64_t> seed = std::nullopt);

// Seeded random pointer trace (press/move/release gestures) over a window.
std::vector<TraceRecord> random_trace(std::uint64_t seed, std::size_t gestures, double windowW, double windowH);

}  // namespace mdpc
