#include "mdpc/session.hpp"

#include <istream>
#include <ostream>

#include "mdpc/errors.hpp"

namespace mdpc {

namespace {

bool is_move(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    return j.is_object() && j.value("type", "") == "move";
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

}  // namespace

Session::Session(InteractionKind kind, ModelStore model, const InteractionConfig& cfg)
    : driver_(make_interaction(kind, std::move(model), cfg)) {
  lastSnapshot_ = to_json(driver_.interaction().model()).dump();
}

std::vector<Message> Session::open() {
  return {frame_message(), model_message()};
}

Message Session::frame_message() {
  const FrameOutput& f = driver_.frame();
  Message m;
  m["type"] = "frame";
  m["seq"] = ++frameSeq_;
  m["display"] = to_json(std::span<const DrawCmd>(f.display));
  if (debugPicking_) {
    const auto debug = picking_debug_view(f.picking);
    m["picking_debug"] = to_json(std::span<const DrawCmd>(debug));
  }
  return m;
}

Message Session::model_message() const {
  Message m;
  m["type"] = "model";
  m["snapshot"] = to_json(driver_.interaction().model());
  return m;
}

Message Session::error_message(const std::string& msg) {
  Message m;
  m["type"] = "error";
  m["msg"] = msg;
  return m;
}

void Session::process(std::string_view line, bool emitFrame, std::vector<Message>& out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    out.push_back(error_message(std::string("malformed JSON: ") + e.what()));
    return;
  }
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    out.push_back(error_message("message needs a string field 'type'"));
    return;
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "debug_picking") {
    if (!j.contains("on") || !j.at("on").is_boolean()) {
      out.push_back(error_message("debug_picking needs a boolean field 'on'"));
      return;
    }
    debugPicking_ = j.at("on").get<bool>();
    out.push_back(frame_message());
    return;
  }
  if (type == "get_model") {
    out.push_back(model_message());
    return;
  }

  try {
    TraceRecord r = parse_record(j, static_cast<std::size_t>(inSeq_ + 1));
    if (!j.contains("seq")) {
      r.seq = inSeq_ + 1;
    } else if (r.seq <= inSeq_) {
      out.push_back(error_message("seq " + std::to_string(r.seq) + " is not greater than " + std::to_string(inSeq_)));
      return;
    }
    inSeq_ = r.seq;
    driver_.apply(r);
  } catch (const Error& e) {
    out.push_back(error_message(e.what()));
  }

  if (emitFrame) {
    out.push_back(frame_message());
  }
  std::string snapshot = to_json(driver_.interaction().model()).dump();
  if (snapshot != lastSnapshot_) {
    lastSnapshot_ = std::move(snapshot);
    out.push_back(model_message());
  }
}

std::vector<Message> Session::handle(std::string_view line) {
  std::vector<Message> out;
  process(line, true, out);
  return out;
}

std::vector<Message> Session::handle_batch(std::span<const std::string> lines) {
  std::vector<Message> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const bool coalesce = i + 1 < lines.size() && is_move(lines[i]) && is_move(lines[i + 1]);
    process(lines[i], !coalesce, out);
  }
  return out;
}

void serve_stream(Session& session, std::istream& in, std::ostream& out) {
  for (const auto& m : session.open()) {
    out << m.dump() << "\n";
  }
  out.flush();
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    for (const auto& m : session.handle(line)) {
      out << m.dump() << "\n";
    }
    out.flush();
  }
}

}  // namespace mdpc
