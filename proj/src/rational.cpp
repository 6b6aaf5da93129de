#include "plk/rational.hpp"

#include <cctype>

#include "plk/error.hpp"

namespace plk {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  const bool den_ok = slash == std::string_view::npos ||
                      (is_integer_literal(den) && den.front() != '-' && den.front() != '+');
  if (!is_integer_literal(num) || !den_ok) {
    raise(ErrorKind::NonRationalValue, "cannot parse '" + std::string(text) + "' as p/q");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) raise(ErrorKind::NonRationalValue, "zero denominator in '" + std::string(text) + "'");
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string format_rational(const Scalar& value) {
  Scalar reduced = value;
  reduced.canonicalize();
  return reduced.get_str(10);
}

}  // namespace plk
