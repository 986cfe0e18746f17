#include <doctest.h>

#include <sstream>

#include "mdpc/errors.hpp"
#include "mdpc/harness.hpp"
#include "mdpc/oracles.hpp"

using namespace mdpc;

TEST_SUITE("harness") {

TEST_CASE("trace parsing fills in seq") {
  std::istringstream in(R"({"type":"move","x":1,"y":2}

{"type":"press","x":1,"y":2,"button":3}
{"seq":10,"type":"wheel","x":0,"y":0,"delta":-1}
{"type":"set_view","zoom":2,"rotation_deg":30}
)");
  const auto t = parse_trace(in);
  REQUIRE(t.size() == 4);
  CHECK(t[0].seq == 1);
  CHECK(t[1].seq == 2);
  CHECK(t[1].button == 3);
  CHECK(t[2].seq == 10);
  CHECK(t[2].delta == -1);
  CHECK(t[3].seq == 11);
  CHECK(*t[3].zoom == 2);
  CHECK(*t[3].rotationDeg == 30);
  CHECK_FALSE(t[3].panX);
}

TEST_CASE("malformed traces report the line") {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_trace(in);
    } catch (const MalformedTrace& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("{\"type\":\"move\",\"x\":1,\"y\":1}\n{oops") == 2);
  CHECK(line_of("{\"type\":\"jump\",\"x\":1,\"y\":1}") == 1);
  CHECK(line_of("{\"type\":\"move\",\"x\":1}") == 1);
  CHECK(line_of("{\"seq\":5,\"type\":\"move\",\"x\":1,\"y\":1}\n{\"seq\":5,\"type\":\"move\",\"x\":1,\"y\":1}") == 2);
  CHECK(line_of("{\"type\":\"resize\",\"w\":0,\"h\":10}") == 1);
  CHECK(line_of("{\"type\":\"move\",\"x\":1,\"y\":1}") == 0);
}

TEST_CASE("records round trip through json") {
  TraceRecord r;
  r.seq = 4;
  r.type = RecordType::SetView;
  r.week = 2;
  r.panX = 12.5;
  const auto back = parse_record(nlohmann::json::parse(to_json(r).dump()), 1);
  CHECK(back.seq == 4);
  CHECK(back.type == RecordType::SetView);
  CHECK(*back.week == 2);
  CHECK(*back.panX == 12.5);
  CHECK_FALSE(back.zoom);
}

TEST_CASE("json diff") {
  const auto a = nlohmann::json::parse(R"({"x":1.0,"y":[1,2],"s":"a"})");
  CHECK(json_diff(a, nlohmann::json::parse(R"({"x":1.0000001,"y":[1,2],"s":"a","extra":1})")).empty());
  const auto d = json_diff(a, nlohmann::json::parse(R"({"x":2,"y":[1],"s":"b"})"));
  CHECK(d.size() == 3);
  CHECK(json_diff(nlohmann::json::parse(R"({"z":1})"), a).size() == 1);
}

TEST_CASE("replay checks expectations") {
  std::istringstream in(R"({"seq":1,"type":"move","x":200,"y":150}
{"seq":2,"type":"press","x":200,"y":150}
{"seq":3,"type":"move","x":230,"y":150}
{"seq":4,"type":"release","x":230,"y":150}
)");
  const auto trace = parse_trace(in);
  const auto expectations = parse_expectations(nlohmann::json::parse(R"([
    {"after_seq":2,"state":"waitHyst"},
    {"after_seq":3,"state":"dragging"},
    {"after_seq":4,"model":{"objects":[{"id":1,"x":230,"y":150}]}},
    {"after_seq":4,"pick":{"x":230,"y":150,"tag":"obj-1"}},
    {"after_seq":4,"state":"dragging"}
  ])"));
  const auto report = replay(InteractionKind::Dnd, default_model(InteractionKind::Dnd), trace, expectations);
  REQUIRE(report.expectations.size() == 5);
  for (int i = 0; i < 4; ++i) {
    CHECK(report.expectations[i].pass);
  }
  CHECK_FALSE(report.expectations[4].pass);
  CHECK_FALSE(report.passed());
  CHECK(report.finalState == "start");
  CHECK(report.to_json()["records"] == 4);
}

TEST_CASE("expectations must name a seq from the trace") {
  const std::vector<TraceRecord> trace{TraceRecord::pointer(1, RecordType::Move, 0, 0)};
  const auto expectations = parse_expectations(nlohmann::json::parse(R"([{"after_seq":9,"state":"start"}])"));
  CHECK_THROWS_AS(replay(InteractionKind::Dnd, default_model(InteractionKind::Dnd), trace, expectations),
                  MalformedTrace);
  CHECK_THROWS_AS(parse_expectations(nlohmann::json::parse(R"([{"after_seq":1}])")), MalformedTrace);
}

TEST_CASE("wheel zooms about the cursor") {
  Driver d(make_interaction(InteractionKind::Dnd, default_model(InteractionKind::Dnd)));
  TraceRecord w;
  w.seq = 1;
  w.type = RecordType::Wheel;
  w.x = 200;
  w.y = 150;
  w.delta = 2;
  d.apply(w);
  CHECK(d.interaction().view().zoom == doctest::Approx(1.21));
  CHECK(d.frame().tag_of(pick(d.frame().pickBuffer, {200, 150})) == "obj-1");
  CHECK(d.frame().tag_of(pick(d.frame().pickBuffer, {200 + 40 * 1.21 - 1, 150})) == "obj-1");
  CHECK(d.frame().tag_of(pick(d.frame().pickBuffer, {200 + 40 * 1.21 + 1, 150})).empty());
}

TEST_CASE("set_view rotation is an extra stage") {
  Driver d(make_interaction(InteractionKind::Dnd, default_model(InteractionKind::Dnd)));
  TraceRecord r;
  r.seq = 1;
  r.type = RecordType::SetView;
  r.rotationDeg = 90;
  d.apply(r);
  REQUIRE(d.extra_stages().size() == 1);
  CHECK(std::holds_alternative<RotateStage>(d.extra_stages()[0]));
  r.seq = 2;
  r.rotationDeg = 0;
  d.apply(r);
  CHECK(d.extra_stages().empty());
}

TEST_CASE("frames render lazily") {
  Driver d(make_interaction(InteractionKind::Dnd, default_model(InteractionKind::Dnd)));
  d.frame();
  d.frame();
  CHECK(d.frames_rendered() == 1);
  d.pointer(EventKind::Move, {5, 5});
  d.frame();
  CHECK(d.frames_rendered() == 1);
  d.pointer(EventKind::Press, {200, 150});
  d.frame();
  CHECK(d.frames_rendered() == 2);
}

TEST_CASE("random traces are reproducible") {
  const auto a = random_trace(42, 20, 300, 200);
  const auto b = random_trace(42, 20, 300, 200);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json(a[i]) == to_json(b[i]));
    CHECK(a[i].x >= 0);
    CHECK(a[i].x < 300);
  }
}

TEST_CASE("oracles") {
  const std::vector<Point> moves{{3, 0}, {4.9, 0}, {6, 0}, {0, 0}};
  const auto v = oracle_hysteresis({0, 0}, moves, 5);
  CHECK(v.outcome == DragOutcome::Drag);
  CHECK(*v.dragStart == 2);
  CHECK(v.boundary);
  const std::vector<BandInterval> bands{{"a", 10, 2}, {"b", 11, 5}};
  CHECK(*oracle_guide_zone(11, bands).tag == "a");
  CHECK(*oracle_guide_zone(15, bands).tag == "b");
  CHECK_FALSE(oracle_guide_zone(17, bands).tag);
  CHECK(boundary_distance(Rect{0, 0, 10, 10}, {5, 4}) == 4);
  CHECK(boundary_distance(Circle{0, 0, 5}, {0, 1}) == 4);
}

}
