#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace postlie {

enum class ErrorKind {
  Parse,
  DivisionByZero,
  NonFinite,
  IllConditioned,
  RankMismatch,
  NotAdjointForm,
  NotOrthogonal,
  NotASolution,
  Inconclusive,
  Singular,
  OutOfRange,
  InvalidParameter,
  NotSymmetric,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (CLI, Python bindings) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace postlie
