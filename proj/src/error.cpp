#include "plk/error.hpp"

namespace plk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::NotSkewUpper: return "NotSkewUpper";
    case ErrorKind::NotSkewDoubled: return "NotSkewDoubled";
    case ErrorKind::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorKind::ThetaNotInvariant: return "ThetaNotInvariant";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::SingularElement: return "SingularElement";
    case ErrorKind::BasisDegenerate: return "BasisDegenerate";
    case ErrorKind::ClosureViolated: return "ClosureViolated";
    case ErrorKind::CYBEViolated: return "CYBEViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::NonRationalValue: return "NonRationalValue";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace plk
