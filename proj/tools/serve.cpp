#include "serve.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>

namespace mdpc::cli {

namespace {

bool send_all(int fd, const std::string& data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) {
      continue;
    }
    if (n <= 0) {
      return false;
    }
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

std::string encode(const std::vector<Message>& messages) {
  std::string out;
  for (const auto& m : messages) {
    out += m.dump();
    out += '\n';
  }
  return out;
}

void run_connection(int fd, Session& session) {
  if (!send_all(fd, encode(session.open()))) {
    return;
  }
  std::string pending;
  char buf[65536];
  for (;;) {
    const ssize_t n = ::recv(fd, buf, sizeof buf, 0);
    if (n < 0 && errno == EINTR) {
      continue;
    }
    if (n <= 0) {
      return;
    }
    pending.append(buf, static_cast<std::size_t>(n));
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t nl; (nl = pending.find('\n', start)) != std::string::npos; start = nl + 1) {
      std::string line = pending.substr(start, nl - start);
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        lines.push_back(std::move(line));
      }
    }
    pending.erase(0, start);
    if (!lines.empty() && !send_all(fd, encode(session.handle_batch(lines)))) {
      return;
    }
  }
}

}  // namespace

int serve_tcp(int port, const SessionFactory& factory) {
  const int server = ::socket(AF_INET, SOCK_STREAM, 0);
  if (server < 0) {
    std::cerr << "socket: " << std::strerror(errno) << "\n";
    return 2;
  }
  int yes = 1;
  ::setsockopt(server, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(server, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0 || ::listen(server, 4) < 0) {
    std::cerr << "cannot listen on port " << port << ": " << std::strerror(errno) << "\n";
    ::close(server);
    return 2;
  }
  std::cerr << "mdpc: NDJSON on 127.0.0.1:" << port << "\n";
  for (;;) {
    const int client = ::accept(server, nullptr, nullptr);
    if (client < 0) {
      if (errno == EINTR) {
        continue;
      }
      std::cerr << "accept: " << std::strerror(errno) << "\n";
      break;
    }
    auto session = factory();
    run_connection(client, *session);
    ::close(client);
  }
  ::close(server);
  return 2;
}

int serve_http(int port, const std::filesystem::path& root, const SessionFactory& factory) {
  httplib::Server server;
  std::mutex mutex;
  auto session = factory();
  bool opened = false;

  if (!root.empty() && !server.set_mount_point("/", root.string())) {
    std::cerr << "static directory " << root << " does not exist\n";
    return 2;
  }
  server.Post("/session", [&](const httplib::Request& req, httplib::Response& res) {
    std::vector<std::string> lines;
    std::istringstream in(req.body);
    for (std::string line; std::getline(in, line);) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        lines.push_back(line);
      }
    }
    std::lock_guard lock(mutex);
    std::vector<Message> out;
    if (!opened) {
      out = session->open();
      opened = true;
    }
    auto batch = session->handle_batch(lines);
    out.insert(out.end(), batch.begin(), batch.end());
    res.set_content(encode(out), "application/x-ndjson");
  });
  server.Post("/session/reset", [&](const httplib::Request&, httplib::Response& res) {
    std::lock_guard lock(mutex);
    session = factory();
    opened = true;
    res.set_content(encode(session->open()), "application/x-ndjson");
  });

  std::cerr << "mdpc: HTTP on 127.0.0.1:" << port << "\n";
  if (!server.listen("127.0.0.1", port)) {
    std::cerr << "cannot listen on port " << port << "\n";
    return 2;
  }
  return 0;
}

}  // namespace mdpc::cli
