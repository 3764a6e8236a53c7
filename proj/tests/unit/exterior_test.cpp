#include <doctest.h>

#include "folia/error.hpp"
#include "folia/exterior/graded.hpp"
#include "support/random.hpp"

using namespace folia;

namespace {

const Chart xyz({"x", "y", "z"});

RatFunc var(std::size_t i) { return RatFunc::variable(3, i); }
RatFunc num(long c) { return RatFunc(3, Rational(c)); }
Form d(std::size_t i) { return Form::coordinate(xyz, i); }
MultiVector D(std::size_t i) { return MultiVector::coordinate(xyz, i); }
Form fn(const RatFunc& f) { return Form::scalar(xyz, f); }

}  // namespace

TEST_CASE("wedge") {
  CHECK(wedge(d(0), d(0)).is_zero());
  CHECK(wedge(d(0), d(1)) == -wedge(d(1), d(0)));
  // bilinear expansion: (x dx) ^ (y dy) = xy dx^dy
  CHECK(wedge(var(0) * d(0), var(1) * d(1)) == (var(0) * var(1)) * wedge(d(0), d(1)));
  CHECK_THROWS_AS(wedge(d(0), Form::coordinate(Chart({"u", "v"}), 0)), InputError);
  // any form above the top degree is zero
  CHECK(wedge(wedge(d(0), d(1)), wedge(d(2), d(0))).is_zero());
}

TEST_CASE("exterior derivative") {
  const RatFunc f = var(0) * var(0) * var(1);
  CHECK(ext_d(ext_d(fn(f))).is_zero());
  CHECK(ext_d(fn(f)) == num(2) * var(0) * var(1) * d(0) + var(0) * var(0) * d(1));
  // d(y dx) = dy ^ dx = -dx ^ dy
  CHECK(ext_d(var(1) * d(0)) == -wedge(d(0), d(1)));
}

TEST_CASE("interior product") {
  CHECK(interior(D(0), d(0)).as_scalar() == num(1));
  CHECK(interior(D(2), wedge(d(0), d(1))).is_zero());
  CHECK(interior(D(0), wedge(d(0), d(1))) == d(1));
  CHECK(interior(D(1), wedge(d(0), d(1))) == -d(0));
  CHECK_THROWS_AS(interior(D(0), fn(var(0))), InputError);
}

TEST_CASE("Lie derivative") {
  CHECK(lie(D(1), var(0) * d(0)).is_zero());
  CHECK(lie(D(0), var(0) * d(0)) == d(0));
  const RatFunc f = var(0) * var(0) / var(2);
  CHECK(lie(D(0), fn(f)).as_scalar() == f.partial(0));
}

TEST_CASE("graded identities on random forms") {
  testing::Generator gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = static_cast<int>(gen.integer(0, 3));
    const int q = static_cast<int>(gen.integer(0, 3));
    const Form a = gen.form(xyz, p, true);
    const Form b = gen.form(xyz, q, true);
    const Rational sign = (p * q) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == wedge(b, a) * sign);
    const Rational sp = p % 2 == 0 ? 1 : -1;
    CHECK(ext_d(wedge(a, b)) == wedge(ext_d(a), b) + wedge(a, ext_d(b)) * sp);
    CHECK(ext_d(ext_d(a)).is_zero());
    const MultiVector v = gen.multivector(xyz, 1, true);
    if (p > 0) {
      const Form lhs = interior(v, wedge(a, b));
      Form rhs = wedge(interior(v, a), b);
      if (q > 0) rhs += wedge(a, interior(v, b)) * sp;
      CHECK(lhs == rhs);
    }
    CHECK(wedge(gen.form(xyz, 2), gen.form(xyz, 2)).is_zero());
  }
}

TEST_CASE("tangency identity for the Lie derivative") {
  // omega = x dy - y dx annihilates the radial field v = x D(x) + y D(y);
  // d(omega) = 2 dx^dy = theta ^ omega with theta = -2(x dx + y dy)/(x^2 + y^2)... use a
  // form whose theta is known: omega = y dx, theta = dy / y.
  const Form omega = var(1) * d(0);
  const Form theta = num(1) / var(1) * d(1);
  REQUIRE(ext_d(omega) == wedge(theta, omega));
  testing::Generator gen(23);
  for (int trial = 0; trial < 10; ++trial) {
    // vector fields killed by omega: combinations of D(y), D(z)
    const MultiVector v = gen.ratfunc(3) * D(1) + gen.ratfunc(3) * D(2);
    REQUIRE(interior(v, omega).is_zero());
    CHECK(lie(v, omega) == interior(v, theta).as_scalar() * omega);
  }
}

TEST_CASE("constant relations of forms") {
  auto rel = constant_relations(std::vector<Form>{d(0), num(2) * d(0)});
  REQUIRE(rel.size() == 1);
  CHECK(rel[0] == RationalVector{2, -1});
  CHECK(constant_relations(std::vector<Form>{d(0), d(1)}).empty());
  rel = constant_relations(std::vector<Form>{d(0), var(0) * d(0), (num(1) + var(0)) * d(0)});
  REQUIRE(rel.size() == 1);
  CHECK(rel[0] == RationalVector{1, 1, -1});
}

TEST_CASE("printing") {
  CHECK(wedge(d(0), d(1)).to_string() == "d(x) /\\ d(y)");
  CHECK((var(1) * d(0) - num(1) / var(1) * d(2)).to_string() == "y*d(x) - (1/y)*d(z)");
  CHECK(Form(xyz, 2).to_string() == "0*d(x) /\\ d(y)");
  CHECK(wedge(D(0), D(1)).to_string() == "D(x) /\\ D(y)");
}
