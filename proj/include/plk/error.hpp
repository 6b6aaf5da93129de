#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plk {

enum class ErrorKind {
  DimensionMismatch,
  NotAntisymmetric,
  NotSkew,
  NotSkewUpper,
  NotSkewDoubled,
  UnknownAlgebra,
  ThetaNotInvariant,
  SizeGuardExceeded,
  AlgebraMismatch,
  NonFinite,
  SingularElement,
  BasisDegenerate,
  ClosureViolated,
  CYBEViolated,
  ParseError,
  IndexOutOfRange,
  DuplicateEntry,
  NonRationalValue,
  MissingField,
  UnknownSuite,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace plk
