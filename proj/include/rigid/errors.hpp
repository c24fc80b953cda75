#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

/// Every failure raised by the library carries a stable kind so callers
/// (and the CLI exit-code mapping) can dispatch without parsing messages.
enum class ErrorKind {
  VarTableMismatch,
  NotDivisible,
  ZeroSubstitutionForUnit,
  NonSquare,
  OddDegree,
  Parse,
  NotCartan,
  InfiniteWeylGroup,
  NotReduced,
  OmegaSearchExhausted,
  UnknownPreset,
  PlateauBudgetExceeded,
  UnstableAtBound,
  NotFound,
  BudgetExceeded,
  NonNewtonZeroLeaf,
  RelationFailed,
  Mismatch,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace rigid
