#pragma once

#include <exception>
#include <stdexcept>
#include <string>

namespace mdpc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularTransform : Error {
  using Error::Error;
};

struct WrongWeek : Error {
  using Error::Error;
};

struct IdOverflow : Error {
  using Error::Error;
};

struct DuplicateId : Error {
  using Error::Error;
};

struct UnknownId : Error {
  using Error::Error;
};

struct UnknownInteraction : Error {
  using Error::Error;
};

struct InvalidModel : Error {
  using Error::Error;
};

// Thrown by Machine::dispatch when a transition action throws. The machine
// stays in the state it was in before the event; the original exception is
// kept in cause().
class ActionFailure : public Error {
 public:
  ActionFailure(const std::string& what, std::exception_ptr cause)
      : Error(what), cause_(std::move(cause)) {}

  const std::exception_ptr& cause() const noexcept { return cause_; }
  [[noreturn]] void rethrow_cause() const { std::rethrow_exception(cause_); }

 private:
  std::exception_ptr cause_;
};

class MalformedTrace : public Error {
 public:
  MalformedTrace(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mdpc
