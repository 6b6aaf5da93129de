#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plk {

/// Exact rational ground field. GMP keeps every value gcd-reduced with a
/// positive denominator after each arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0). Throws
/// Error{NonRationalValue} on anything else.
Scalar parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

inline double to_double(const Scalar& value) { return value.get_d(); }

}  // namespace plk
