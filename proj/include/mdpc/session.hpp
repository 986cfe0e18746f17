#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mdpc/harness.hpp"

namespace mdpc {

using Message = nlohmann::ordered_json;

// One live interaction loop behind the NDJSON protocol.
//
// client -> core: trace records ({"type":"press","x":..,"y":..}, ...),
//   {"type":"debug_picking","on":true} and {"type":"get_model"}.
// core -> client: {"type":"frame","seq":n,"display":[...],"picking_debug":[...]},
//   {"type":"model","snapshot":{...}} and {"type":"error","msg":"..."}.
//
// Input records go through the same Driver as trace replay.
class Session {
 public:
  Session(InteractionKind kind, ModelStore model, const InteractionConfig& cfg = {});

  // The first frame plus the initial model.
  std::vector<Message> open();

  std::vector<Message> handle(std::string_view line);

  // Processes lines in order. A move immediately followed by another move
  // produces no frame of its own.
  std::vector<Message> handle_batch(std::span<const std::string> lines);

  Driver& driver() { return driver_; }
  const Driver& driver() const { return driver_; }
  bool debug_picking() const { return debugPicking_; }
  std::int64_t in_seq() const { return inSeq_; }
  std::uint64_t frame_seq() const { return frameSeq_; }

  Message frame_message();
  Message model_message() const;
  static Message error_message(const std::string& msg);

 private:
  void process(std::string_view line, bool emitFrame, std::vector<Message>& out);

  Driver driver_;
  bool debugPicking_ = false;
  std::int64_t inSeq_ = 0;
  std::uint64_t frameSeq_ = 0;
  std::string lastSnapshot_;
};

// Blocking loop over a line stream, e.g. stdin/stdout. Returns at EOF.
void serve_stream(Session& session, std::istream& in, std::ostream& out);

}  // namespace mdpc
