#pragma once

#include <filesystem>
#include <functional>
#include <memory>

#include "mdpc/session.hpp"

namespace mdpc::cli {

using SessionFactory = std::function<std::unique_ptr<Session>()>;

// NDJSON over TCP, one session per connection, one connection at a time.
// Lines that arrive together are handled as one batch.
int serve_tcp(int port, const SessionFactory& factory);

// Static files from `root` plus POST /session (NDJSON body in, NDJSON out)
// against a single shared session; POST /session/reset starts a new one.
int serve_http(int port, const std::filesystem::path& root, const SessionFactory& factory);

}  // namespace mdpc::cli
