#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdpc/geometry.hpp"

namespace mdpc {

enum class EventKind { Press, Release, Move, Enter, Leave, Wheel, Resize };

std::string_view to_string(EventKind kind);

struct Event {
  EventKind kind = EventKind::Move;
  // Pointer position in the interaction's own (scene) coordinates.
  Point p;
  int button = 0;
  // Topmost picked tag for pointer events; the crossed object's tag for
  // Enter/Leave. Empty over the background.
  std::string tag;
  // Raw screen position, before any inverse view transform.
  Point screen;
};

enum class TagMatch { Any, Exact, Prefix };

struct Pattern {
  EventKind kind = EventKind::Move;
  TagMatch match = TagMatch::Any;
  std::string tag;
  std::optional<int> button;

  bool matches(const Event& e) const;

  static Pattern on(EventKind kind) { return {kind, TagMatch::Any, {}, std::nullopt}; }
  static Pattern on_tag(EventKind kind, std::string tag) {
    return {kind, TagMatch::Exact, std::move(tag), std::nullopt};
  }
  static Pattern on_prefix(EventKind kind, std::string prefix) {
    return {kind, TagMatch::Prefix, std::move(prefix), std::nullopt};
  }
};

using Guard = std::function<bool(const Event&)>;
using Action = std::function<void(const Event&)>;

struct Transition {
  std::string name;
  Pattern pattern;
  std::string target;
  Guard guard;
  Action action;
};

// Flat finite state machine. Within a state, transitions are tried in
// declaration order and the first one whose pattern matches and whose guard
// holds fires. Unmatched events are ignored.
class Machine {
 public:
  explicit Machine(std::string initial);

  Machine& add_state(const std::string& name);
  Machine& add_transition(const std::string& from, Transition t);

  // Throws std::logic_error if any transition targets an unknown state.
  void validate() const;

  // Returns the fired transition or nullptr. If the action throws, the
  // machine stays in its current state and ActionFailure is thrown.
  const Transition* dispatch(const Event& e);

  const std::string& current() const { return current_; }
  const std::string& initial() const { return initial_; }
  bool has_state(const std::string& name) const { return states_.count(name) != 0; }
  std::vector<std::string> state_names() const;
  const std::vector<Transition>& transitions(const std::string& state) const;

  void reset() { current_ = initial_; }

 private:
  std::string initial_;
  std::string current_;
  std::map<std::string, std::vector<Transition>> states_;
};

}  // namespace mdpc
