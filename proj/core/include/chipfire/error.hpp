#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chipfire {

enum class ErrorCode {
  SingularMatrix,
  NonSquare,
  DimensionMismatch,
  NotAnMMatrix,
  SingularL,
  InvalidConfiguration,
  IndexOutOfRange,
  CannotFire,
  NegativeScript,
  IterationCapExceeded,
  BoxTooLarge,
  BallTooLarge,
  DeterminantExceedsCap,
  DisconnectedFromSink,
  NotASpanningTree,
  EmptyComplex,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this exception; `code()` lets
// callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chipfire
