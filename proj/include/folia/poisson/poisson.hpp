#pragma once

#include <span>

#include "folia/exterior/graded.hpp"

namespace folia {

// Bivectors and trivectors are MultiVectors of degree 2 and 3. With
// P^{ij} the antisymmetric components (P^{ij} = coefficient of D(x_i)/\D(x_j)
// for i < j):
//
//   [P,Q]^{ijk} = sum over cyclic (i,j,k) of sum_l (P^{li} d_l Q^{jk} + Q^{li} d_l P^{jk})
//   sharp(P, a)^j = sum_i a_i P^{ij}
//
// so that [fP, fP] = 2 f sharp(P, df) /\ P whenever [P,P] = 0.

// Throws InputError for chart mismatch or arguments of degree != 2.
MultiVector schouten(const MultiVector& p, const MultiVector& q);

bool is_poisson(const MultiVector& p);

// Throws PreconditionError unless both arguments are Poisson.
bool pencil_compatible(const MultiVector& p, const MultiVector& q);

MultiVector sharp(const MultiVector& p, const Form& alpha);

// {f, g} = P(df, dg).
RatFunc poisson_bracket(const MultiVector& p, const RatFunc& f, const RatFunc& g);

// [fP, fP] - 2 f sharp(P, df) /\ P. Throws PreconditionError unless P is
// Poisson.
MultiVector scaling_defect(const RatFunc& f, const MultiVector& p);

// Contraction of P into dx_1 /\ dx_2 /\ dx_3, first slot first:
// D(x)/\D(y) -> dz, D(y)/\D(z) -> dx, D(x)/\D(z) -> -dy. Both directions
// throw InputError unless the chart has three variables.
Form bivector_to_form(const MultiVector& p);
MultiVector form_to_bivector(const Form& eta);

// Rank of the matrix (P^{ij}) at a point. Throws ArithmeticError at a pole.
std::size_t rank_at(const MultiVector& p, std::span<const Rational> point);

}  // namespace folia
