#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hhq {

enum class ErrorKind {
  DivisionByZero,
  MixedDiscriminant,
  PerfectSquareDiscriminant,
  RepeatedRoot,
  RationalRoots,
  NegativeIndexWithZeroQ,
  EmptyRange,
  Parse,
  InexactValue,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what callers
/// (the CLI, the auditor) dispatch on; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hhq
