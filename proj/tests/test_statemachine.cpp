#include <doctest.h>

#include <stdexcept>

#include "mdpc/errors.hpp"
#include "mdpc/statemachine.hpp"

using namespace mdpc;

namespace {

Event ev(EventKind k, std::string tag = {}, int button = 1) {
  Event e;
  e.kind = k;
  e.tag = std::move(tag);
  e.button = button;
  return e;
}

}  // namespace

TEST_SUITE("statemachine") {

TEST_CASE("patterns") {
  CHECK(Pattern::on(EventKind::Press).matches(ev(EventKind::Press, "x")));
  CHECK_FALSE(Pattern::on(EventKind::Press).matches(ev(EventKind::Release)));
  CHECK(Pattern::on_tag(EventKind::Enter, "a").matches(ev(EventKind::Enter, "a")));
  CHECK_FALSE(Pattern::on_tag(EventKind::Enter, "a").matches(ev(EventKind::Enter, "ab")));
  CHECK(Pattern::on_prefix(EventKind::Enter, "guide-").matches(ev(EventKind::Enter, "guide-h-top-1")));
  CHECK_FALSE(Pattern::on_prefix(EventKind::Enter, "guide-").matches(ev(EventKind::Enter, "obj-1")));
  Pattern right = Pattern::on(EventKind::Press);
  right.button = 3;
  CHECK_FALSE(right.matches(ev(EventKind::Press, "", 1)));
  CHECK(right.matches(ev(EventKind::Press, "", 3)));
}

TEST_CASE("first matching transition in declaration order fires") {
  std::vector<std::string> log;
  Machine m("a");
  m.add_state("a").add_state("b").add_state("c");
  m.add_transition("a", {"blocked", Pattern::on(EventKind::Press), "c", [](const Event&) { return false; }, {}});
  m.add_transition("a", {"first", Pattern::on(EventKind::Press), "b", {}, [&](const Event&) { log.push_back("first"); }});
  m.add_transition("a", {"second", Pattern::on(EventKind::Press), "c", {}, [&](const Event&) { log.push_back("second"); }});
  m.validate();

  const Transition* t = m.dispatch(ev(EventKind::Press));
  REQUIRE(t);
  CHECK(t->name == "first");
  CHECK(m.current() == "b");
  CHECK(log == std::vector<std::string>{"first"});

  CHECK(m.dispatch(ev(EventKind::Press)) == nullptr);
  CHECK(m.current() == "b");
  m.reset();
  CHECK(m.current() == "a");
}

TEST_CASE("failing action leaves the state unchanged") {
  Machine m("idle");
  m.add_state("idle").add_state("busy");
  m.add_transition("idle", {"go", Pattern::on(EventKind::Press), "busy", {},
                            [](const Event&) { throw UnknownId("event 42"); }});
  try {
    m.dispatch(ev(EventKind::Press));
    FAIL("expected ActionFailure");
  } catch (const ActionFailure& f) {
    CHECK_THROWS_AS(f.rethrow_cause(), UnknownId);
  }
  CHECK(m.current() == "idle");
}

TEST_CASE("validation") {
  Machine m("a");
  m.add_state("a");
  m.add_transition("a", {"x", Pattern::on(EventKind::Move), "nowhere", {}, {}});
  CHECK_THROWS_AS(m.validate(), std::logic_error);
  CHECK(m.has_state("a"));
  CHECK_FALSE(m.has_state("nowhere"));
}

TEST_CASE("event kind names") {
  CHECK(to_string(EventKind::Enter) == "Enter");
  CHECK(to_string(EventKind::Leave) == "Leave");
}

}
