#pragma once

// Dense univariate polynomials over Q, used for root finding and for
// arithmetic modulo a minimal polynomial. Coefficients are stored from
// the constant term up; the zero polynomial is empty.

#include <optional>
#include <vector>

#include "folia/field/polynomial.hpp"

namespace folia::locus_detail {

using QPoly = std::vector<Rational>;

QPoly trimmed(QPoly p);
int degree(const QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly mod(const QPoly& a, const QPoly& m);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
Rational evaluate(const QPoly& a, const Rational& x);
// Inverse of a modulo m, or nullopt when they share a factor.
std::optional<QPoly> inverse_mod(const QPoly& a, const QPoly& m);

// Univariate view of a polynomial that only involves `var`.
QPoly from_polynomial(const Polynomial& p, std::size_t var);

// Value of p at a point whose coordinates are residues modulo m.
QPoly evaluate_mod(const Polynomial& p, const std::vector<QPoly>& point, const QPoly& m);

// Monic irreducible factors of a nonzero polynomial of degree <= 4,
// without multiplicity. Rational roots come from Sturm isolation, quartic
// splits from the resolvent cubic.
struct Factorization {
  std::vector<QPoly> factors;
};
Factorization distinct_irreducible_factors(const QPoly& p);

}  // namespace folia::locus_detail
