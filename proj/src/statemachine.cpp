#include "mdpc/statemachine.hpp"

#include <stdexcept>

#include "mdpc/errors.hpp"

namespace mdpc {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Press: return "Press";
    case EventKind::Release: return "Release";
    case EventKind::Move: return "Move";
    case EventKind::Enter: return "Enter";
    case EventKind::Leave: return "Leave";
    case EventKind::Wheel: return "Wheel";
    case EventKind::Resize: return "Resize";
  }
  return "?";
}

bool Pattern::matches(const Event& e) const {
  if (e.kind != kind) {
    return false;
  }
  if (button && e.button != *button) {
    return false;
  }
  switch (match) {
    case TagMatch::Any: return true;
    case TagMatch::Exact: return e.tag == tag;
    case TagMatch::Prefix: return e.tag.starts_with(tag);
  }
  return false;
}

Machine::Machine(std::string initial) : initial_(initial), current_(initial) {
  states_[initial];
}

Machine& Machine::add_state(const std::string& name) {
  states_[name];
  return *this;
}

Machine& Machine::add_transition(const std::string& from, Transition t) {
  states_[from].push_back(std::move(t));
  return *this;
}

void Machine::validate() const {
  for (const auto& [name, transitions] : states_) {
    for (const auto& t : transitions) {
      if (!has_state(t.target)) {
        throw std::logic_error("transition '" + t.name + "' in state '" + name +
                               "' targets unknown state '" + t.target + "'");
      }
    }
  }
}

const Transition* Machine::dispatch(const Event& e) {
  const auto& transitions = states_.at(current_);
  for (const auto& t : transitions) {
    if (!t.pattern.matches(e)) {
      continue;
    }
    if (t.guard && !t.guard(e)) {
      continue;
    }
    if (!has_state(t.target)) {
      throw std::logic_error("transition '" + t.name + "' targets unknown state '" + t.target + "'");
    }
    if (t.action) {
      try {
        t.action(e);
      } catch (const std::exception& ex) {
        throw ActionFailure("action of transition '" + t.name + "' in state '" + current_ +
                                "' failed: " + ex.what(),
                            std::current_exception());
      }
    }
    current_ = t.target;
    return &t;
  }
  return nullptr;
}

std::vector<std::string> Machine::state_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : states_) {
    out.push_back(name);
  }
  return out;
}

const std::vector<Transition>& Machine::transitions(const std::string& state) const {
  return states_.at(state);
}

}  // namespace mdpc
