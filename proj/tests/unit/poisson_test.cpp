#include <doctest.h>

#include "folia/error.hpp"
#include "folia/foliation/foliation.hpp"
#include "folia/poisson/poisson.hpp"
#include "support/instances.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

const Chart xyz({"x", "y", "z"});

RatFunc X() { return var(xyz, 0); }
RatFunc Y() { return var(xyz, 1); }
RatFunc Z() { return var(xyz, 2); }
RatFunc one() { return constant(xyz, 1); }
Form dX() { return coord(xyz, 0); }
Form dY() { return coord(xyz, 1); }
Form dZ() { return coord(xyz, 2); }

MultiVector D(std::size_t i) { return MultiVector::coordinate(xyz, i); }
MultiVector Dxy() { return wedge(D(0), D(1)); }
MultiVector Dyz() { return wedge(D(1), D(2)); }
MultiVector Dxz() { return wedge(D(0), D(2)); }

// Poisson bivector h dg on three variables (integrable one-form).
MultiVector random_poisson(Generator& gen) {
  for (;;) {
    const RatFunc h = RatFunc(gen.nonzero_polynomial(3, 1, 2));
    const Form dg = differential(xyz, RatFunc(gen.polynomial(3, 2, 3)));
    if (!dg.is_zero()) return form_to_bivector(h * dg);
  }
}

RatFunc jacobiator(const MultiVector& p, const RatFunc& f, const RatFunc& g, const RatFunc& h) {
  return poisson_bracket(p, f, poisson_bracket(p, g, h)) + poisson_bracket(p, g, poisson_bracket(p, h, f)) +
         poisson_bracket(p, h, poisson_bracket(p, f, g));
}

}  // namespace

TEST_CASE("Schouten bracket basics") {
  CHECK(schouten(Dxy(), Dyz()).is_zero());
  const Chart xy({"x", "y"});
  const MultiVector p2 = MultiVector::basis(xy, 0b11, var(xy, 0) * var(xy, 1));
  CHECK(schouten(p2, p2).is_zero());
  CHECK_FALSE(is_poisson(Dxy() + Y() * Dyz()));
  CHECK(is_poisson(Dxy()));
  CHECK(is_poisson(Dxy() + X() * Dyz()));
  CHECK_THROWS_AS(schouten(Dxy(), D(0)), InputError);
  CHECK_THROWS_AS(schouten(Dxy(), p2), InputError);
}

TEST_CASE("Schouten bracket is symmetric and bilinear") {
  Generator gen(103);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiVector p = gen.multivector(xyz, 2), q = gen.multivector(xyz, 2), r = gen.multivector(xyz, 2);
    const Rational c = gen.rational();
    CHECK(schouten(p, q) == schouten(q, p));
    CHECK(schouten(p * c + r, q) == schouten(p, q) * c + schouten(r, q));
    // polarization
    CHECK(schouten(p + q, p + q) == schouten(p, p) + schouten(q, q) + schouten(p, q) * Rational(2));
  }
}

TEST_CASE("self-bracket against the coordinate Jacobiator") {
  // [P,P]^{ijk} = -2 ({x_i,{x_j,x_k}} + cyclic)
  Generator gen(107);
  const Chart four({"p", "q", "r", "s"});
  for (int trial = 0; trial < 8; ++trial) {
    const Chart& chart = trial % 2 == 0 ? xyz : four;
    const MultiVector p = gen.multivector(chart, 2);
    const MultiVector pp = schouten(p, p);
    const std::size_t n = chart.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const RatFunc J = jacobiator(p, var(chart, i), var(chart, j), var(chart, k));
          CHECK(pp.coefficient((IndexSet{1} << i) | (IndexSet{1} << j) | (IndexSet{1} << k)) == J * Rational(-2));
        }
      }
    }
  }
}

TEST_CASE("bivector and one-form correspondence") {
  CHECK(bivector_to_form(Dxy()) == dZ());
  CHECK(bivector_to_form(Dyz()) == dX());
  CHECK(bivector_to_form(Dxz()) == -dY());
  CHECK(bivector_to_form(Dxy() + Y() * Dyz()) == dZ() + Y() * dX());
  CHECK_THROWS_AS(bivector_to_form(MultiVector::basis(Chart({"x", "y"}), 0b11, RatFunc(2, 1))), InputError);

  Generator gen(109);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiVector p = gen.multivector(xyz, 2, true);
    const Form eta = bivector_to_form(p);
    CHECK(form_to_bivector(eta) == p);
    CHECK(is_poisson(p) == is_integrable(eta));
    // [P,P] = 2 eta /\ d eta under the volume identification
    CHECK(schouten(p, p).coefficient(0b111) == wedge(eta, ext_d(eta)).coefficient(0b111) * Rational(2));
    const Form w = gen.form(xyz, 1, true);
    if (!w.is_zero()) CHECK(bivector_to_form(form_to_bivector(w)) == w);
  }
  for (int trial = 0; trial < 10; ++trial) CHECK(is_poisson(random_poisson(gen)));
}

TEST_CASE("sharp") {
  CHECK(sharp(Dxy(), dX()) == D(1));
  CHECK(sharp(Dxy(), Form(xyz, 1)).is_zero());
  CHECK(sharp(X() * Dxy(), dY()) == -(X() * D(0)));
  CHECK_THROWS_AS(sharp(Dxy(), wedge(dX(), dY())), InputError);
}

TEST_CASE("pencils") {
  CHECK(pencil_compatible(Dxy(), Dyz()));
  Generator gen(113);
  const MultiVector p = random_poisson(gen);
  CHECK(pencil_compatible(p, p));

  // dx and z dy are integrable, dx + z dy is not
  const MultiVector a = form_to_bivector(dX()), b = form_to_bivector(Z() * dY());
  REQUIRE(is_poisson(a));
  REQUIRE(is_poisson(b));
  CHECK_FALSE(pencil_compatible(a, b));
  CHECK_FALSE(is_poisson(a + b));
  CHECK_THROWS_AS(pencil_compatible(Dxy() + Y() * Dyz(), a), PreconditionError);

  for (int trial = 0; trial < 12; ++trial) {
    MultiVector q = random_poisson(gen), r = random_poisson(gen);
    if (trial % 3 == 0) {
      // h dg1 and h dg2 span an integrable pencil
      const RatFunc h(gen.nonzero_polynomial(3, 1, 2));
      q = form_to_bivector(h * differential(xyz, RatFunc(gen.nonzero_polynomial(3, 2, 2))));
      r = form_to_bivector(h * differential(xyz, RatFunc(gen.nonzero_polynomial(3, 2, 2))));
    }
    const bool compatible = pencil_compatible(q, r);
    CHECK(compatible == is_poisson(q + r));
    for (int s = 0; s < 3; ++s) CHECK(compatible == is_poisson(q + r * gen.nonzero_rational()));
  }
}

TEST_CASE("Jacobi identity for Poisson bivectors") {
  Generator gen(127);
  for (int trial = 0; trial < 6; ++trial) {
    const MultiVector p = random_poisson(gen);
    const RatFunc f = gen.ratfunc(3), g = gen.ratfunc(3), h = gen.ratfunc(3);
    CHECK(jacobiator(p, f, g, h).is_zero());
  }
  const MultiVector bad = Dxy() + Y() * Dyz();
  CHECK_FALSE(jacobiator(bad, X(), Y(), Z()).is_zero());
}

TEST_CASE("scaling identity") {
  CHECK(scaling_defect(constant(xyz, 3), Dxy()).is_zero());
  CHECK(scaling_defect(X(), Dxy()).is_zero());
  CHECK(scaling_defect(X() * Y(), Dxy() + X() * Dyz()).is_zero());
  CHECK_THROWS_AS(scaling_defect(X(), Dxy() + Y() * Dyz()), PreconditionError);
  Generator gen(131);
  const Chart four({"p", "q", "r", "s"});
  for (int trial = 0; trial < 10; ++trial) {
    const RatFunc f = gen.nonzero_ratfunc(3);
    CHECK(scaling_defect(f, random_poisson(gen)).is_zero());
  }
  // on four variables [fP, fP] need not vanish
  const MultiVector symplectic = MultiVector::basis(four, 0b0011, RatFunc(4, 1)) + MultiVector::basis(four, 0b1100, RatFunc(4, 1));
  const MultiVector scaled = MultiVector::basis(four, 0b0011, var(four, 3));
  for (const auto& p4 : {symplectic, scaled}) {
    REQUIRE(is_poisson(p4));
    for (int trial = 0; trial < 5; ++trial) CHECK(scaling_defect(gen.nonzero_ratfunc(4), p4).is_zero());
  }
  const MultiVector fp4 = var(four, 1) * var(four, 3) * symplectic;
  CHECK_FALSE(schouten(fp4, fp4).is_zero());
}

TEST_CASE("rank at a point") {
  const std::vector<Rational> origin = {0, 0, 0}, p = {1, 2, 3};
  CHECK(rank_at(Dxy(), origin) == 2);
  CHECK(rank_at(X() * Dxy(), origin) == 0);
  CHECK(rank_at(X() * Dxy() + Dyz(), p) == 2);
  const Chart four({"p", "q", "r", "s"});
  const MultiVector sym = MultiVector::basis(four, 0b0011, RatFunc(4, 1)) + MultiVector::basis(four, 0b1100, RatFunc(4, 1));
  const std::vector<Rational> q = {0, 0, 0, 0};
  CHECK(rank_at(sym, q) == 4);
}
