#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsplit {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  ExponentOverflow,
  ZeroDivisorColon,
  NotArtinian,
  NotGorenstein,
  NotContaining,
  NotHomogeneous,
  MissingFlag,
  CostGuardExceeded,
  BudgetExceeded,
  InternalInconsistency,
  ParseError,
  NonPrimeCharacteristic,
  DuplicateVariable,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

// Mathematical preconditions map to CLI exit code 2, budget guards to 3.
bool is_budget_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace fsplit
