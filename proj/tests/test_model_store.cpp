#include <doctest.h>

#include <cmath>
#include <random>

#include "mdpc/errors.hpp"
#include "mdpc/model_store.hpp"

using namespace mdpc;

TEST_SUITE("model_store") {

TEST_CASE("select_visible keeps overlapping events ordered by start then id") {
  const std::vector<CalendarEvent> evs{{3, 100, 200, "c"}, {1, 0, 50, "a"}, {2, 100, 150, "b"}, {4, 300, 400, "d"}};
  const auto v = select_visible(evs, 50, 300);
  REQUIRE(v.size() == 2);
  CHECK(v[0].id == 2);
  CHECK(v[1].id == 3);
}

TEST_CASE("update_event enforces the minimum duration on the moved edge") {
  std::vector<CalendarEvent> evs{{1, 600, 660, "x"}};
  update_event(evs, 1, 600, 605);
  CHECK(evs[0].end == 615);
  update_event(evs, 1, 610, 615);
  CHECK(evs[0].start == 600);
  CHECK(evs[0].end == 615);
  update_event(evs, 1, 700, 705);
  CHECK(evs[0].start == 700);
  CHECK(evs[0].end == 715);
  CHECK_THROWS_AS(update_event(evs, 9, 0, 100), UnknownId);
}

TEST_CASE("overlap layout splits connected components") {
  const std::vector<CalendarEvent> day{{1, 0, 60, ""}, {2, 30, 90, ""}, {3, 80, 120, ""}, {4, 200, 260, ""}};
  const auto slots = overlap_layout(day);
  CHECK(slots.at(1) == LayoutSlot{0, 3});
  CHECK(slots.at(2) == LayoutSlot{1, 3});
  CHECK(slots.at(3) == LayoutSlot{2, 3});
  CHECK(slots.at(4) == LayoutSlot{0, 1});
}

TEST_CASE("touching events do not overlap") {
  const std::vector<CalendarEvent> day{{1, 0, 60, ""}, {2, 60, 90, ""}};
  const auto slots = overlap_layout(day);
  CHECK(slots.at(1) == LayoutSlot{0, 1});
  CHECK(slots.at(2) == LayoutSlot{0, 1});
}

TEST_CASE("calendar table") {
  CalendarTable t({{1, 0, 60, "a"}});
  CHECK(t.contains(1));
  CHECK(t.get(1).title == "a");
  CHECK_THROWS_AS(t.get(2), UnknownId);
  CHECK_THROWS_AS(t.insert({1, 5, 10, "dup"}), InvalidModel);
  t.insert({2, 5, 10, "b"});
  CHECK(t.select_visible(0, 100).size() == 2);
}

TEST_CASE("scrollbar shift preserves the extent exactly") {
  auto m = ScrollbarModel::make(0.2, 0.5);
  const double extent = m.extent();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 1000; ++i) {
    m = scrollbar_shift(m, u(rng));
    REQUIRE(m.valid());
    REQUIRE(m.extent() == extent);
  }
  const auto s = scrollbar_shift(ScrollbarModel::make(0.2, 0.5), 0.1);
  CHECK(s.low == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(s.high == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(scrollbar_shift(s, 5).high == 1.0);
  CHECK(scrollbar_shift(s, -5).low == 0.0);
  CHECK_THROWS_AS(ScrollbarModel::make(0.6, 0.5), InvalidModel);
}

TEST_CASE("quantization is idempotent") {
  for (double v : {0.0, 0.1, 0.2, 1.0 / 3, 1.0}) {
    CHECK(quantize_fraction(quantize_fraction(v)) == quantize_fraction(v));
    CHECK(std::abs(quantize_fraction(v) - v) <= std::ldexp(1.0, -33));
  }
}

TEST_CASE("json round trip") {
  ModelStore m;
  m.calendar = CalendarTable({{1, 600, 660.5, "standup"}});
  m.scrollbar = ScrollbarModel::make(0.25, 0.75);
  m.objects = {{1, 10, 20, 30, 40}};
  m.guides = {{1, Axis::Horizontal, 100}, {2, Axis::Vertical, 50}};
  const auto j = to_json(m);
  CHECK(j["events"][0]["start_min"].is_number_integer());
  CHECK(j["events"][0]["end_min"] == 660.5);
  CHECK(j["guides"][1]["axis"] == "vertical");
  CHECK(model_from_json(nlohmann::json::parse(j.dump())) == m);
  CHECK_FALSE(j.contains("min_duration"));

  m.calendar = CalendarTable({{1, 600, 660, "x"}}, 30);
  const auto k = to_json(m);
  CHECK(k["min_duration"] == 30.0);
  CHECK(model_from_json(nlohmann::json::parse(k.dump())).calendar.min_duration() == 30);
}

TEST_CASE("invalid models are rejected") {
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"events":[{"id":1,"start_min":10,"end_min":5}]})")),
                  InvalidModel);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"objects":[{"id":1,"x":0,"y":0,"w":-1,"h":1}]})")),
                  InvalidModel);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"guides":[{"id":1,"axis":"diagonal","pos":0}]})")),
                  InvalidModel);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"([1,2])")), InvalidModel);
}

}
