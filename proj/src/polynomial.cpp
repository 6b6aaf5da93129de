#include "plk/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "plk/error.hpp"

namespace plk {

namespace {

constexpr std::uint64_t kNibbleCarryMask = 0x1111111111111110ULL;

}  // namespace

Monomial Monomial::variable(std::size_t var) {
  if (var >= kMaxVariables) raise(ErrorKind::SizeGuardExceeded, "polynomials support at most 16 variables");
  return Monomial(std::uint64_t{1} << (4 * var));
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    raise(ErrorKind::SizeGuardExceeded, "polynomials support at most 16 variables");
  }
  std::uint64_t packed = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > kMaxExponent) raise(ErrorKind::SizeGuardExceeded, "exponent above 15");
    packed |= std::uint64_t{exponents[v]} << (4 * v);
  }
  return Monomial(packed);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::uint64_t p = packed_; p != 0; p >>= 4) d += static_cast<unsigned>(p & 0xF);
  return d;
}

std::vector<unsigned> Monomial::exponents(std::size_t nvars) const {
  std::vector<unsigned> out(nvars);
  for (std::size_t v = 0; v < nvars; ++v) out[v] = exponent(v);
  return out;
}

Monomial operator*(Monomial a, Monomial b) {
  const std::uint64_t sum = a.packed_ + b.packed_;
  const bool carried = ((sum ^ a.packed_ ^ b.packed_) & kNibbleCarryMask) != 0 || sum < a.packed_;
  if (carried) raise(ErrorKind::SizeGuardExceeded, "monomial exponent above 15");
  return Monomial(sum);
}

Monomial Monomial::lowered(std::size_t var) const {
  if (exponent(var) == 0) raise(ErrorKind::InvalidArgument, "cannot lower a zero exponent");
  return Monomial(packed_ - (std::uint64_t{1} << (4 * var)));
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > Monomial::kMaxVariables) {
    raise(ErrorKind::SizeGuardExceeded, "polynomials support at most 16 variables");
  }
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& value) {
  Polynomial p(nvars);
  p.add_term(Monomial(), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var, const Scalar& coeff) {
  if (var >= nvars) raise(ErrorKind::IndexOutOfRange, "variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::variable(var), coeff);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar Polynomial::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::max_abs_coefficient() const {
  Scalar best = 0;
  for (const auto& [m, c] : terms_) {
    if (cmp(abs(c), best) > 0) best = abs(c);
  }
  return best;
}

void Polynomial::add_term(Monomial m, const Scalar& coeff) {
  if (plk::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (plk::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) raise(ErrorKind::DimensionMismatch, "polynomials over different variable sets");
}

void Polynomial::add_scaled(const Polynomial& p, const Scalar& factor) {
  require_compatible(p);
  if (plk::is_zero(factor)) return;
  for (const auto& [m, c] : p.terms_) add_term(m, c * factor);
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b, const Scalar& factor) {
  require_compatible(a);
  require_compatible(b);
  if (a.is_zero() || b.is_zero() || plk::is_zero(factor)) return;
  Scalar term;
  for (const auto& [ma, ca] : a.terms_) {
    const Scalar scaled = ca * factor;
    for (const auto& [mb, cb] : b.terms_) {
      term = scaled * cb;
      add_term(ma * mb, term);
    }
  }
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) raise(ErrorKind::IndexOutOfRange, "variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e > 0) out.terms_.emplace(m.lowered(var), c * e);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  if (plk::is_zero(factor)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars_);
  out.add_product(a, b);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) raise(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      for (unsigned e = m.exponent(v); e > 0; --e) term *= point[v];
    total += term;
  }
  return total;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) raise(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (std::size_t v = 0; v < nvars_; ++v) {
      const unsigned e = m.exponent(v);
      if (e > 0) term *= std::pow(point[v], static_cast<int>(e));
    }
    total += term;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    const Scalar magnitude = abs(c);
    const bool unit = magnitude == 1 && m.degree() > 0;
    if (!unit) out << format_rational(magnitude);
    bool first_factor = unit;
    for (std::size_t v = 0; v < nvars_; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      out << (first_factor ? "" : "*") << 'x' << v + 1;
      if (e > 1) out << '^' << e;
      first_factor = false;
    }
    first = false;
  }
  return out.str();
}

Scalar PolynomialFamily::max_abs_coefficient() const {
  Scalar best = 0;
  for (const auto& member : nonzero) {
    const Scalar m = member.poly.max_abs_coefficient();
    if (cmp(m, best) > 0) best = m;
  }
  return best;
}

}  // namespace plk
