#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folia/field/rational.hpp"

namespace folia {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order, x1 > x2 > ... > xn. Used as "greater" so
// that maps iterate from the leading term downwards.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over the rationals in a fixed number of
// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& constant);

  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponents exponents, const Rational& coeff);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; zero for the zero polynomial.
  Rational constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Leading term under grlex. Requires a nonzero polynomial.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  int total_degree() const;  // -1 for zero
  int degree_in(std::size_t var) const;  // -1 for zero
  bool contains(std::size_t var) const { return degree_in(var) > 0; }
  // Highest-index variable that occurs, or nullopt for constants.
  std::optional<std::size_t> main_variable() const;

  Rational coefficient(const Exponents& e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  // Substitutes var := value; the variable slot stays but no longer occurs.
  Polynomial substitute(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Same polynomial viewed in more variables (new ones appended).
  Polynomial extended(std::size_t new_nvars) const;
  // Drops trailing variable slots; they must not occur.
  Polynomial truncated(std::size_t new_nvars) const;
  // Renames variable i to mapping[i] in a ring with target_nvars variables.
  Polynomial remapped(std::span<const std::size_t> mapping,
                      std::size_t target_nvars) const;

  // Coefficients with respect to `var`: result[k] multiplies var^k and
  // does not contain var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients(std::span<const Polynomial> coeffs,
                                      std::size_t var);

  // Scalar multiple with leading coefficient 1. Zero stays zero.
  Polynomial monic() const;
  // LCM of coefficient denominators divided by GCD of numerators;
  // multiplying by it yields a primitive integer polynomial.
  Rational integer_normalizer() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::size_t nvars_;
  TermMap terms_;
  friend class PolynomialBuilder;
};

// Accumulates terms without re-normalizing after each insertion.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(std::size_t nvars) : poly_(nvars) {}
  void add(const Exponents& e, const Rational& c) { poly_.add_term(e, c); }
  Polynomial take() { return std::move(poly_); }

 private:
  Polynomial poly_;
};

// Multivariate division with respect to grlex. Returns (quotient, remainder).
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);
// Quotient if b divides a exactly.
std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b);
// Throws ArithmeticError if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

// Sylvester resultant with respect to `var`.
Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var);

}  // namespace folia
