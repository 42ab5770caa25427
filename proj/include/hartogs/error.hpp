#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hartogs {

enum class ErrorKind {
  InvalidArgument,
  LengthMismatch,
  InvalidPoint,
  NonConvergent,
  IterationCap,
  PoleProximity,
  Overflow,
  RootFindingFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` is what callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hartogs
