#pragma once

#include <span>
#include <string>

#include "folia/field/polynomial.hpp"

namespace folia {

// Element of Q(x1, ..., xn), kept in a canonical reduced form:
//  * gcd(num, den) = 1,
//  * num and den have integer coefficients whose joint content is 1,
//  * the grlex leading coefficient of den is positive,
//  * zero is 0/1.
// Two equal fractions therefore have identical representations.
class RatFunc {
 public:
  explicit RatFunc(std::size_t nvars = 0) : num_(nvars), den_(nvars, 1) {}
  RatFunc(std::size_t nvars, const Rational& c) : num_(nvars, c), den_(nvars, 1) { canonicalize_scalars(); }
  explicit RatFunc(Polynomial num) : num_(std::move(num)), den_(num_.nvars(), 1) { canonicalize_scalars(); }
  // Reduces num/den. Throws InputError for a zero denominator.
  RatFunc(Polynomial num, Polynomial den);

  static RatFunc variable(std::size_t nvars, std::size_t index) {
    return RatFunc(Polynomial::variable(nvars, index));
  }

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  // Number of stored terms in numerator and denominator, a sparsity measure.
  std::size_t size() const { return num_.num_terms() + den_.num_terms(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  // Throws ArithmeticError when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Rational& c);
  friend RatFunc operator*(const Rational& c, const RatFunc& a) { return a * c; }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(int exponent) const;
  RatFunc inverse() const;
  RatFunc partial(std::size_t var) const;
  RatFunc substitute(std::size_t var, const Rational& value) const;
  // Throws ArithmeticError if the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;
  RatFunc extended(std::size_t new_nvars) const;
  RatFunc truncated(std::size_t new_nvars) const;

  // Parseable rendering, e.g. "(x^2 - 1)/(2*x)" or "3/2*y".
  std::string to_string(std::span<const std::string> names) const;

 private:
  struct Reduced {};
  RatFunc(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize_scalars();
  }
  void canonicalize_scalars();
  Polynomial num_;
  Polynomial den_;
};

// Canonical representative of num/den (the normalize operation).
inline RatFunc normalize(Polynomial num, Polynomial den) {
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace folia
