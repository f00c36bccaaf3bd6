#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hardy {

enum class ErrorKind {
  InvalidArgument,
  FamilyMismatch,
  NotPolynomial,
  NotHermitian,
  ZeroPolynomial,
  NotAZero,
  NotSimple,
  OutsideDisk,
  SeriesDivergence,
  NonConvergence,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every precondition or numerical failure raised by the
/// library. The kind is stable and is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hardy
