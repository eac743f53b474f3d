#pragma once

#include <stdexcept>
#include <string>

namespace sepindex {

/// Error categories; the CLI maps them onto exit codes.
enum class ErrorKind {
  Input,         // malformed input, failed precondition on user data
  CapExceeded,   // exponential routine refused to run above its vertex cap
  Violation,     // a checked theorem or invariant failed
  Internal,      // an algorithm reached a state its proof rules out
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& routine, int n, int cap)
      : Error(ErrorKind::CapExceeded, routine + ": " + std::to_string(n) +
                                          " vertices exceeds the cap of " + std::to_string(cap)),
        cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace sepindex
