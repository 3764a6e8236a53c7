#include <doctest.h>

#include "folia/error.hpp"
#include "folia/foliation/foliation.hpp"
#include "folia/godbillon/godbillon.hpp"
#include "support/instances.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

const Chart xy({"x", "y"});
const Chart xyz({"x", "y", "z_"});

RatFunc X() { return var(xy, 0); }
RatFunc Y() { return var(xy, 1); }
Form dX() { return coord(xy, 0); }
Form dY() { return coord(xy, 1); }
RatFunc one() { return constant(xy, 1); }

// Oracle: z^k part of W /\ dW for W = dz + sum z^n w_n, from the expansion
//   dz /\ (dw_k - sum_{m+n=k+1} n w_m /\ w_n) + sum_{m+n=k} w_m /\ dw_n,
// assembled on the base chart and lifted at the end.
Form expected_part(const std::vector<Form>& w, std::size_t k, const Chart& big) {
  const std::size_t N = w.size();
  auto at = [&](std::size_t i) { return i < N ? w[i] : Form(w.front().chart(), 1); };
  Form inner = ext_d(at(k));
  for (std::size_t n = 1; n <= k + 1; ++n) inner -= wedge(at(k + 1 - n), at(n)) * Rational(static_cast<long>(n));
  Form flat(w.front().chart(), 3);
  for (std::size_t n = 0; n <= k; ++n) flat += wedge(at(k - n), ext_d(at(n)));
  const Form dz = Form::coordinate(big, big.size() - 1);
  return wedge(dz, inner.lifted(big)) + flat.lifted(big);
}

}  // namespace

TEST_CASE("Godbillon-Vey conditions") {
  CHECK(gv_conditions(GVSequence({dX()})).empty());
  CHECK(gv_conditions(GVSequence({differential(xy, X() * X() / Y())})).empty());
  CHECK(gv_conditions(GVSequence({Y() * dX(), -(one() / Y()) * dY()})).empty());

  const std::vector<GVCondition> bad = gv_conditions(GVSequence({Y() * dX(), dX()}));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().power == 0);
  // dz /\ (d(y dx) - 0) = dz /\ (-dx /\ dy)
  const GVSequence seq({Y() * dX(), dX()});
  const Chart big = seq.extended_chart();
  CHECK(bad.front().coefficient == -wedge(Form::coordinate(big, 2), wedge(coord(big, 0), coord(big, 1))));
}

TEST_CASE("auxiliary coordinate avoids taken names") {
  const Chart c({"x", "z"});
  const GVSequence seq({coord(c, 0)});
  CHECK(seq.extended_chart().size() == 3);
  CHECK(seq.extended_chart().name(2) != "z");
}

TEST_CASE("Godbillon-Vey conditions agree with the expansion") {
  Generator gen(41);
  for (int trial = 0; trial < 12; ++trial) {
    const Chart& chart = trial % 2 == 0 ? xy : xyz;
    std::vector<Form> w;
    const int n = static_cast<int>(gen.integer(1, 3));
    for (int k = 0; k < n; ++k) w.push_back(random_linear_form(gen, chart));
    const GVSequence seq(w);
    const Chart big = seq.extended_chart();
    std::vector<Form> expected(2 * w.size() + 1, Form(big, 3));
    for (std::size_t k = 0; k < expected.size(); ++k) expected[k] = expected_part(w, k, big);
    for (const auto& c : gv_conditions(seq)) {
      REQUIRE(c.power < expected.size());
      CHECK(c.coefficient == expected[c.power]);
      expected[c.power] = Form(big, 3);
    }
    for (const auto& e : expected) CHECK(e.is_zero());
  }
}

TEST_CASE("appending zero forms leaves the conditions unchanged") {
  Generator gen(43);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Form> w = {random_linear_form(gen, xyz), random_linear_form(gen, xyz)};
    const auto base = gv_conditions(GVSequence(w));
    w.push_back(Form(xyz, 1));
    w.push_back(Form(xyz, 1));
    const GVSequence padded(w);
    CHECK(padded.length() == 2);
    const auto more = gv_conditions(padded);
    REQUIRE(more.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(more[i].power == base[i].power);
      CHECK(more[i].coefficient == base[i].coefficient);
    }
  }
}

TEST_CASE("pullbacks of verified sequences are integrable") {
  Generator gen(47);
  const PlaneExample ex;
  const GVSequence riccati({dY() - (Y() * Y() + X()) * dX(), -(constant(xy, 2) * Y()) * dX(), -dX()});
  REQUIRE(gv_conditions(riccati).empty());
  std::vector<GVSequence> verified = {GVSequence({Y() * dX(), -(one() / Y()) * dY()}), riccati};
  for (const auto& w : ex.omegas) verified.push_back(sequence_from_theta(w, ex.eta));
  for (const auto& seq : verified) {
    REQUIRE(gv_conditions(seq).empty());
    for (int s = 0; s < 4; ++s) {
      const Form p = seq.pullback(gen.rational());
      CHECK(is_integrable(p));
    }
  }
  CHECK(verified[0].pullback(0) == Y() * dX());
}

TEST_CASE("closed theta certificates and length-2 sequences") {
  const PlaneExample ex;
  const ThetaCertificate cert = common_theta(ex.omegas);
  REQUIRE(cert.closed);
  for (const auto& w : ex.omegas) {
    const GVSequence seq = sequence_from_theta(w, cert.theta);
    CHECK(gv_conditions(seq).empty());
    const Form theta = theta_from_sequence(seq);
    CHECK(theta == ex.eta);
    CHECK(ext_d(theta).is_zero());
    CHECK(ext_d(w) == wedge(theta, w));
  }
  // a theta that is not closed does not give a sequence
  const Form w = Y() * dX();
  const Form theta = one() / Y() * dY() + X() * w;
  REQUIRE(ext_d(w) == wedge(theta, w));
  REQUIRE_FALSE(ext_d(theta).is_zero());
  CHECK_FALSE(gv_conditions(sequence_from_theta(w, theta)).empty());
  CHECK_THROWS_AS(theta_from_sequence(sequence_from_theta(w, theta)), PreconditionError);
}

TEST_CASE("rational primitives") {
  std::optional<RatFunc> g = rational_primitive(differential(xy, X() * Y()));
  REQUIRE(g);
  CHECK(*g == X() * Y());
  g = rational_primitive(one() / (X() * X()) * dX());
  REQUIRE(g);
  CHECK(*g == -one() / X());
  CHECK_FALSE(rational_primitive(one() / X() * dX()));
  CHECK_FALSE(rational_primitive(one() / X() * dX() + one() / Y() * dY()));
  CHECK_THROWS_AS(rational_primitive(Y() * dX()), PreconditionError);

  Generator gen(53);
  for (int trial = 0; trial < 15; ++trial) {
    const RatFunc f = gen.ratfunc(3);
    const Form df = differential(xyz, f);
    const std::optional<RatFunc> p = rational_primitive(df);
    REQUIRE(p);
    CHECK((*p - f).is_constant());
  }
}

TEST_CASE("transverse classification") {
  const Form exact = differential(xy, X() * Y());
  TransverseReport r = classify_transverse(exact, GVSequence({exact}));
  CHECK(r.kind == TransverseClass::exact);
  REQUIRE(r.primitive);
  CHECK(*r.primitive == X() * Y());

  const Form log = one() / X() * dX() + one() / Y() * dY();
  r = classify_transverse(log, GVSequence({log}));
  CHECK(r.kind == TransverseClass::closed);
  CHECK_FALSE(r.primitive);

  const Form w = Y() * dX();
  r = classify_transverse(w, GVSequence({w, -(one() / Y()) * dY()}));
  CHECK(r.kind == TransverseClass::affine);
  CHECK(r.candidate_verified);
  CHECK(r.length == 2);

  // a verified length-1 candidate exhibits a closed defining form: y dx ~ dx
  r = classify_transverse(w, GVSequence({dX()}));
  CHECK(r.kind == TransverseClass::exact);

  r = classify_transverse(w, GVSequence({w, dX()}));
  CHECK(r.kind == TransverseClass::unverified);
  CHECK_FALSE(r.conditions.empty());

  const Form ric = dY() - (Y() * Y() + X()) * dX();
  r = classify_transverse(ric, GVSequence({ric, -(constant(xy, 2) * Y()) * dX(), -dX()}));
  CHECK(r.kind == TransverseClass::projective);

  CHECK_THROWS_AS(classify_transverse(w, GVSequence({dY()})), InputError);
  CHECK_THROWS_AS(GVSequence({Form(xy, 1), dX()}), InputError);
  CHECK_THROWS_AS(GVSequence(std::vector<Form>{}), InputError);
}

TEST_CASE("plane example is transversely affine but not closed") {
  const PlaneExample ex;
  for (const auto& w : ex.omegas) {
    const TransverseReport r = classify_transverse(w, sequence_from_theta(w, ex.eta));
    CHECK(r.kind == TransverseClass::affine);
    CHECK_FALSE(r.closed_witness);
  }
}
