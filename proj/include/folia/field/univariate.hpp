#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "folia/field/ratfunc.hpp"

namespace folia {

// Polynomial in one chart variable `var` whose coefficients are rational
// functions free of `var`. This is K[var] with K = Q(other variables).
class FieldUniPoly {
 public:
  FieldUniPoly(std::size_t nvars, std::size_t var) : nvars_(nvars), var_(var) {}
  FieldUniPoly(std::size_t var, std::vector<RatFunc> coeffs);
  static FieldUniPoly from_polynomial(const Polynomial& p, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  std::size_t var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& leading() const { return coeffs_.back(); }

  friend FieldUniPoly operator+(const FieldUniPoly& a, const FieldUniPoly& b);
  friend FieldUniPoly operator-(const FieldUniPoly& a, const FieldUniPoly& b);
  friend FieldUniPoly operator*(const FieldUniPoly& a, const FieldUniPoly& b);
  friend FieldUniPoly operator*(const FieldUniPoly& a, const RatFunc& c);

  FieldUniPoly derivative() const;
  FieldUniPoly monic() const;
  RatFunc to_ratfunc() const;

 private:
  void trim();
  std::size_t nvars_;
  std::size_t var_;
  std::vector<RatFunc> coeffs_;
};

std::pair<FieldUniPoly, FieldUniPoly> divmod(const FieldUniPoly& a, const FieldUniPoly& b);
FieldUniPoly gcd(const FieldUniPoly& a, const FieldUniPoly& b);
// (s, t) with s*a + t*b = c and deg s < deg b; requires gcd(a, b) | c.
std::pair<FieldUniPoly, FieldUniPoly> solve_diophantine(const FieldUniPoly& a, const FieldUniPoly& b,
                                                        const FieldUniPoly& c);

// Rational function g with dg/dvar = f, when one exists (Hermite
// reduction leaves no logarithmic part). Otherwise nullopt.
std::optional<RatFunc> rational_antiderivative(const RatFunc& f, std::size_t var);

}  // namespace folia
