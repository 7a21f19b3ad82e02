#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

/// Failure categories; the command-line tool maps them to exit codes.
enum class ErrorKind {
  InvalidArgument,  ///< precondition violated by caller input
  Parse,            ///< malformed text input (group spec, fixture, cycles)
  Guard,            ///< desk-scale resource guard exceeded
  Invariant,        ///< internal self-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace atlas
