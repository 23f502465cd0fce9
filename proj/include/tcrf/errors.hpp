#pragma once

#include <stdexcept>
#include <string>

namespace tcrf {

enum class ErrorKind {
  InvalidParameter,   // bad argument values; CLI exit code 2
  PoleEvaluation,     // transfer function evaluated at a pole
  NumericInstability, // ill-conditioned branch chosen for near-equal poles
  ShapeMismatch,
  InsufficientHistory,
  TooSmallImage,
  NoMaximumFound,
  IoError,            // runtime/IO problems; CLI exit code 1
  UnsupportedFormat,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
  throw Error(ErrorKind::InvalidParameter, "invalid-parameter: " + message);
}

} // namespace tcrf
