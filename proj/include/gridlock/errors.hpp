#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gridlock {

enum class ErrorCode {
  // state and network validation
  CapacityExceeded,
  ZeroLengthRoute,
  NonSimpleRoute,
  EdgeMissing,
  RouteStartMismatch,
  UnknownVertex,
  DuplicateVertex,
  DuplicateEdge,
  SelfLoop,
  BadCapacity,
  BadItemCount,
  // move application
  InfeasibleMove,
  InfeasibleMoveAt,
  // decider
  NotATree,
  // planner
  WiseFollowerSaturated,
  NoSafeStep,
  PreconditionViolated,
  // instance text and files
  SyntaxError,
  IoError,
  // generator
  GenerationInfeasible,
};

const char* to_string(ErrorCode code);

// Single exception type for everything the library can reject. `line` is set
// when the error is located in instance or plan text, `index` when it names a
// plan step.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  std::optional<int> line;
  std::optional<std::size_t> index;

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

[[noreturn]] inline void fail_at_line(ErrorCode code, int line,
                                      const std::string& message) {
  Error e(code, "line " + std::to_string(line) + ": " + message);
  e.line = line;
  throw e;
}

}  // namespace gridlock
