#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "plk/rational.hpp"

namespace plk {

/// Exponent vector packed four bits per variable: at most 16 variables and
/// exponent 15 per variable, enough for gl(4).
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 16;
  static constexpr unsigned kMaxExponent = 15;

  constexpr Monomial() = default;
  static Monomial variable(std::size_t var);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned exponent(std::size_t var) const { return static_cast<unsigned>((packed_ >> (4 * var)) & 0xF); }
  unsigned degree() const;
  std::vector<unsigned> exponents(std::size_t nvars) const;
  std::uint64_t packed() const noexcept { return packed_; }

  friend Monomial operator*(Monomial a, Monomial b);
  /// The monomial with `var`'s exponent lowered by one; requires exponent > 0.
  Monomial lowered(std::size_t var) const;

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  explicit constexpr Monomial(std::uint64_t packed) : packed_(packed) {}
  std::uint64_t packed_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients. No zero
/// coefficient is ever stored, so is_zero() is an exact identity test.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars);

  static Polynomial constant(std::size_t nvars, const Scalar& value);
  static Polynomial variable(std::size_t nvars, std::size_t var, const Scalar& coeff = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  unsigned degree() const;
  Scalar coefficient(Monomial m) const;
  Scalar max_abs_coefficient() const;

  void add_term(Monomial m, const Scalar& coeff);
  /// *this += factor * p
  void add_scaled(const Polynomial& p, const Scalar& factor);
  /// *this += factor * a * b
  void add_product(const Polynomial& a, const Polynomial& b, const Scalar& factor = 1);

  Polynomial derivative(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Scalar& f, Polynomial p) { return p *= f; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Scalar evaluate(std::span<const Scalar> point) const;
  double evaluate(std::span<const double> point) const;

  /// Human-readable form such as "1/2*x1^2 - x2" (variables 1-based).
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// A family of polynomials indexed by small integer tuples, as produced by
/// the identity checks. Only nonzero members are kept.
struct PolynomialFamily {
  struct Member {
    std::vector<std::size_t> index;  // 0-based
    Polynomial poly;
  };

  std::size_t nvars = 0;
  std::size_t index_rank = 0;
  std::vector<Member> nonzero;

  bool is_zero() const noexcept { return nonzero.empty(); }
  Scalar max_abs_coefficient() const;
};

}  // namespace plk
