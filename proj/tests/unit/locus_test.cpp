#include <doctest.h>

#include <algorithm>

#include "folia/error.hpp"
#include "folia/locus/locus.hpp"
#include "locus/qpoly.hpp"
#include "support/instances.hpp"

using namespace folia;
using namespace folia::testing;
using folia::locus_detail::QPoly;

namespace {

const Chart xyz({"x", "y", "z"});

RatFunc X() { return var(xyz, 0); }
RatFunc Y() { return var(xyz, 1); }
RatFunc Z() { return var(xyz, 2); }
RatFunc k(long c) { return constant(xyz, c); }
Form dX() { return coord(xyz, 0); }
Form dY() { return coord(xyz, 1); }
Form dZ() { return coord(xyz, 2); }

Form field(const RatFunc& p, const RatFunc& q, const RatFunc& r) { return p * dX() + q * dY() + r * dZ(); }

Polynomial a(std::size_t i) { return Polynomial::variable(3, i); }

// p is a nonzero rational multiple of q
bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p * q.leading_coefficient() == q * p.leading_coefficient();
}

// Three forms with one or two sparse terms of degree <= 1.
std::vector<Form> sparse_triple(Generator& gen) {
  std::vector<Form> w;
  for (int i = 0; i < 3; ++i) {
    Form f(xyz, 1);
    while (f.is_zero()) {
      f = Form(xyz, 1);
      const long terms = gen.integer(1, 3);
      for (long t = 0; t < terms; ++t) f += RatFunc(gen.polynomial(3, 1, 1)) * coord(xyz, static_cast<std::size_t>(gen.integer(0, 2)));
    }
    w.push_back(f);
  }
  return w;
}

std::optional<FormSpace> try_space(std::vector<Form> w) {
  try {
    return FormSpace(std::move(w));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

bool on_component(const LocusReport& r, const RationalVector& v) {
  auto dot = [&](const RationalVector& n) {
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += n[i] * v[i];
    return s;
  };
  if (r.kind == LocusKind::whole_plane) return true;
  for (const auto& line : r.lines) {
    if (!line.conjugate_pair() && dot(line.base) == 0) return true;
    if (line.conjugate_pair() && dot(line.base) * dot(line.base) == line.radicand * dot(line.offset) * dot(line.offset)) return true;
  }
  if (r.conic) {
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) s += v[i] * r.conic->matrix(i, j) * v[j];
    }
    if (s == 0) return true;
  }
  for (const auto& p : r.points) {
    if (auto q = p.rational()) {
      const RationalVector& u = *q;
      if (u[0] * v[1] == u[1] * v[0] && u[0] * v[2] == u[2] * v[0] && u[1] * v[2] == u[2] * v[1]) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("cone quadrics of small spaces") {
  CHECK(cone_quadrics(FormSpace({dX(), dY(), dZ()})).quadrics.empty());

  const QuadricSystem q1 = cone_quadrics(FormSpace({dX(), dY(), Y() * dZ()}));
  REQUIRE(q1.quadrics.size() == 1);
  CHECK(proportional(q1.polynomial(0), a(0) * a(2)));
  const RationalMatrix& m = q1.quadrics[0];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == m(j, i));
  }

  const QuadricSystem q2 = cone_quadrics(FormSpace({dX(), dY(), X() * dY() + dZ()}));
  REQUIRE(q2.quadrics.size() == 1);
  CHECK(proportional(q2.polynomial(0), a(2) * a(2)));

  // planar forms: no three-forms at all
  const Chart xy({"x", "y"});
  CHECK(cone_quadrics(FormSpace({coord(xy, 0), var(xy, 0) * coord(xy, 1)})).quadrics.empty());
}

TEST_CASE("membership") {
  const FormSpace w({dX(), dY(), Y() * dZ()});
  const std::vector<Rational> e0 = {1, 0, 0}, v101 = {1, 0, 1}, v011 = {0, 1, 1}, zero = {0, 0, 0};
  CHECK(membership(w, e0));
  CHECK_FALSE(membership(w, v101));
  CHECK(membership(w, v011));
  CHECK_THROWS_AS(membership(w, zero), InputError);
}

TEST_CASE("quadrics agree with direct integrability") {
  Generator gen(61);
  int spaces = 0;
  while (spaces < 8) {
    std::vector<Form> w;
    const std::size_t dim = spaces % 2 == 0 ? 3 : 4;
    for (std::size_t i = 0; i < dim; ++i) w.push_back(random_linear_form(gen, xyz));
    const auto space = try_space(w);
    if (!space) continue;
    ++spaces;
    const QuadricSystem sys = cone_quadrics(*space);
    for (int s = 0; s < 100; ++s) {
      const std::vector<Rational> v = sparse_vector(gen, dim);
      const Form combo = space->combination(v);
      CHECK(wedge(combo, ext_d(combo)).is_zero() == sys.vanishes_at(v));
    }
  }
}

TEST_CASE("integrable cone is closed under scaling") {
  Generator gen(67);
  for (int trial = 0; trial < 30; ++trial) {
    const auto space = try_space(sparse_triple(gen));
    if (!space) continue;
    for (int s = 0; s < 10; ++s) {
      const std::vector<Rational> v = sparse_vector(gen, 3);
      if (!membership(*space, v)) continue;
      const Rational lambda = gen.nonzero_rational();
      std::vector<Rational> scaled = v;
      for (auto& x : scaled) x *= lambda;
      CHECK(membership(*space, scaled));
    }
  }
}

TEST_CASE("three integrable points on a line force the whole line") {
  Generator gen(71);
  int lines = 0;
  for (int trial = 0; trial < 400 && lines < 40; ++trial) {
    const auto space = try_space(sparse_triple(gen));
    if (!space) continue;
    // random line through two random points of P(W)
    const std::vector<Rational> p = sparse_vector(gen, 3), q = sparse_vector(gen, 3);
    auto point = [&](const Rational& t) {
      std::vector<Rational> v(3);
      for (std::size_t i = 0; i < 3; ++i) v[i] = p[i] + t * q[i];
      return v;
    };
    const std::vector<Rational> ts = {0, 1, -1};
    bool all = true;
    for (const auto& t : ts) {
      const auto v = point(t);
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) all = false;
      all = all && membership(*space, v);
    }
    if (!all) continue;
    ++lines;
    for (int extra = 0; extra < 2; ++extra) {
      Rational t = gen.rational(9);
      while (t == 0 || t == 1 || t == -1) t = gen.rational(9);
      CHECK(membership(*space, point(t)));
    }
    CHECK(membership(*space, q));
  }
  CHECK(lines > 5);
}

TEST_CASE("plane locus of the small examples") {
  LocusReport r = classify_plane_locus(FormSpace({dX(), dY(), dZ()}));
  CHECK(r.kind == LocusKind::whole_plane);
  CHECK(r.verified);
  CHECK(r.plane_samples.size() >= 3);

  r = classify_plane_locus(FormSpace({dX(), dY(), Y() * dZ()}));
  CHECK(r.kind == LocusKind::two_lines);
  CHECK(r.verified);
  REQUIRE(r.lines.size() == 2);
  std::vector<RationalVector> normals = {r.lines[0].base, r.lines[1].base};
  std::sort(normals.begin(), normals.end());
  CHECK(normals == std::vector<RationalVector>{{0, 0, 1}, {1, 0, 0}});
  for (const auto& line : r.lines) {
    CHECK(line.minimal_degree);
    CHECK(line.samples.size() == 3);
    CHECK(line.multiplicity == 1);
  }

  r = classify_plane_locus(FormSpace({dX(), dY(), X() * dY() + dZ()}));
  CHECK(r.kind == LocusKind::double_line);
  CHECK(r.verified);
  REQUIRE(r.lines.size() == 1);
  CHECK(r.lines[0].base == RationalVector{0, 0, 1});
  CHECK(r.lines[0].multiplicity == 2);
  CHECK(r.lines[0].minimal_degree);

  CHECK_THROWS_AS(classify_plane_locus(FormSpace({dX(), dY()})), InputError);
}

TEST_CASE("plane locus: conics") {
  // single quadric 2 a0^2 - 3 a1 a2
  LocusReport r = classify_plane_locus(FormSpace({field(k(3) * Y(), k(-2) * Z(), k(0)), k(3) * Y() * dZ(), k(-3) * X() * dY()}));
  CHECK(r.kind == LocusKind::smooth_conic);
  CHECK(r.verified);
  REQUIRE(r.conic);
  CHECK(r.conic->minimal_degree);
  REQUIRE(r.conic->samples.size() == 5);
  for (const auto& s : r.conic->samples) CHECK(2 * s[0] * s[0] == 3 * s[1] * s[2]);

  // single quadric 3 a0^2 - a1^2 - a2^2: 3 is not a sum of two rational squares
  const Form w0 = field(k(6) * X(), k(2) * Y() - Z(), k(2) * Z() + Y());
  const Form w1 = field(Z() - k(2) * Y(), k(-2) * X(), -X());
  const Form w2 = field(-(k(2) * Z() + Y()), X(), k(-2) * X());
  r = classify_plane_locus(FormSpace({w0, w1, w2}));
  CHECK(r.kind == LocusKind::smooth_conic);
  REQUIRE(r.conic);
  CHECK(proportional(r.system.polynomial(0), 3 * a(0) * a(0) - a(1) * a(1) - a(2) * a(2)));
  CHECK(r.conic->samples.empty());
  CHECK_FALSE(r.notes.empty());
  CHECK(r.verified);
}

TEST_CASE("plane locus: conjugate lines") {
  // single quadric 3 a0^2 + 2 a1^2, singular at [0:0:1]
  const LocusReport r = classify_plane_locus(FormSpace({dX() + k(3) * Z() * dY(), field(k(2) * Z(), k(-1), k(-2)), k(3) * Z() * dZ()}));
  CHECK(r.kind == LocusKind::two_lines);
  CHECK(r.verified);
  REQUIRE(r.lines.size() == 1);
  const LineComponent& pair = r.lines[0];
  REQUIRE(pair.conjugate_pair());
  // (base . a)^2 - radicand (offset . a)^2 is proportional to the quadric
  const Polynomial lb = pair.base[0] * a(0) + pair.base[1] * a(1) + pair.base[2] * a(2);
  const Polynomial lo = pair.offset[0] * a(0) + pair.offset[1] * a(1) + pair.offset[2] * a(2);
  CHECK(proportional(lb * lb - pair.radicand * lo * lo, 3 * a(0) * a(0) + 2 * a(1) * a(1)));
  CHECK(pair.radicand < 0);
  REQUIRE(pair.samples.size() == 1);
  CHECK(pair.samples[0] == RationalVector{0, 0, 1});
}

TEST_CASE("plane locus: finite points") {
  // a0 a1 = 0, a2 (a0 - 2 a1 - a2) = 0: four rational points
  LocusReport r = classify_plane_locus(FormSpace({field(-Z(), k(3) * Z(), k(0)), -(k(2) * X() + k(2)) * dZ(), field(Z(), k(-3), k(0))}));
  CHECK(r.kind == LocusKind::finite_points);
  CHECK(r.verified);
  REQUIRE(r.point_count() == 4);
  std::vector<RationalVector> pts;
  for (const auto& p : r.points) {
    CHECK(p.minimal_degree);
    REQUIRE(p.rational());
    pts.push_back(*p.rational());
  }
  std::sort(pts.begin(), pts.end());
  std::vector<RationalVector> expected = {{0, 1, 0}, {0, 1, -2}, {1, 0, 0}, {1, 0, 1}};
  for (auto& e : expected) e = primitive_integer(e);
  std::sort(expected.begin(), expected.end());
  CHECK(pts == expected);
  CHECK(general_position4(pts));

  // a0 a2 = 0, 3 a0^2 - 6 a1^2 - 4 a2^2 = 0: two conjugate pairs
  r = classify_plane_locus(FormSpace({field(k(-3), k(0), Y()), field(k(3) * Y(), k(0), k(-2)), field(k(2) * Z(), k(2), k(0))}));
  CHECK(r.kind == LocusKind::finite_points);
  CHECK(r.verified);
  CHECK(r.point_count() == 4);
  REQUIRE(r.points.size() == 2);
  for (const auto& p : r.points) {
    CHECK(p.count() == 2);
    CHECK_FALSE(p.rational());
  }
}

TEST_CASE("plane locus: line with an isolated point") {
  Generator gen(73);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 10; ++trial) {
    const auto space = try_space(sparse_triple(gen));
    if (!space) continue;
    const LocusReport r = classify_plane_locus(*space);
    if (r.kind != LocusKind::line_plus_points) continue;
    ++seen;
    CHECK(r.verified);
    REQUIRE(r.lines.size() == 1);
    REQUIRE(r.points.size() == 1);
    const auto p = r.points[0].rational();
    REQUIRE(p);
    CHECK(membership(*space, *p));
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += (*p)[i] * r.lines[0].base[i];
    CHECK(s != 0);
  }
  CHECK(seen == 10);
}

TEST_CASE("plane locus covers every small integrable vector") {
  Generator gen(79);
  std::map<LocusKind, int> kinds;
  int spaces = 0;
  for (int trial = 0; trial < 400 && spaces < 60; ++trial) {
    const auto space = try_space(sparse_triple(gen));
    if (!space) continue;
    ++spaces;
    const LocusReport r = classify_plane_locus(*space);
    ++kinds[r.kind];
    CHECK(r.verified);
    CHECK(r.point_count() <= 4);
    for (const auto& line : r.lines) {
      CHECK(line.minimal_degree);
      for (const auto& s : line.samples) CHECK(membership(*space, s));
    }
    for (const auto& p : r.points) {
      if (auto v = p.rational()) CHECK(membership(*space, *v));
    }
    for (long i = -2; i <= 2; ++i) {
      for (long j = -2; j <= 2; ++j) {
        for (long l = -2; l <= 2; ++l) {
          if (i == 0 && j == 0 && l == 0) continue;
          const RationalVector v = {Rational(i), Rational(j), Rational(l)};
          if (membership(*space, v)) CHECK(on_component(r, v));
        }
      }
    }
  }
  CHECK(kinds.size() >= 5);
}

TEST_CASE("Veronese polynomial") {
  CHECK(veronese_poly(std::vector<Form>{dX(), dY(), dZ()}).empty());

  const std::vector<Form> fam = {dX(), dY(), Y() * dZ()};
  const std::vector<Form> poly = veronese_poly(fam);
  REQUIRE(poly.size() == 3);
  CHECK(poly[0].is_zero());
  CHECK(poly[1].is_zero());
  CHECK(poly[2] == wedge(dX(), wedge(dY(), dZ())));

  CHECK_THROWS_AS(veronese_poly(std::vector<Form>{dX()}), InputError);

  Generator gen(83);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t kdeg = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Form> f;
    for (std::size_t i = 0; i <= kdeg; ++i) f.push_back(random_linear_form(gen, xyz));
    const std::vector<Form> p = veronese_poly(f);
    CHECK(p.size() <= 2 * kdeg + 1);
    // oracle: direct product at sample parameters
    for (int s = 0; s < 3; ++s) {
      const Rational t = gen.rational();
      Form w(xyz, 1);
      Rational power = 1;
      for (const auto& x : f) {
        w += x * power;
        power *= t;
      }
      Form value(xyz, 3);
      power = 1;
      for (const auto& c : p) {
        value += c * power;
        power *= t;
      }
      CHECK(value == wedge(w, ext_d(w)));
    }
  }
}

TEST_CASE("Veronese sampling verdicts") {
  const std::vector<Form> closed = {dX(), dY(), dZ()};
  const std::vector<Rational> s012 = {0, 1, 2};
  VeroneseReport r = veronese_check(closed, s012);
  CHECK(r.verdict == VeroneseVerdict::integrable_everywhere);
  CHECK(r.family_degree == 2);
  CHECK(r.sufficient_count == 5);
  CHECK(r.sufficient_count_applies == true);

  const std::vector<Form> fam = {dX(), dY(), Y() * dZ()};
  const std::vector<Rational> s1 = {1}, s0 = {0}, dup = {1, 1};
  r = veronese_check(fam, s1);
  CHECK(r.verdict == VeroneseVerdict::not_integrable);
  REQUIRE(r.witness);
  CHECK(*r.witness == 1);
  r = veronese_check(fam, s0);
  CHECK(r.verdict == VeroneseVerdict::insufficient_samples);
  CHECK(r.degree == 2);
  CHECK_THROWS_AS(veronese_check(fam, dup), InputError);

  // integrable-everywhere exactly when the polynomial vanishes
  Generator gen(89);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t kdeg = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Form> f;
    const bool exact = trial % 2 == 0;
    for (std::size_t i = 0; i <= kdeg; ++i) {
      f.push_back(exact ? differential(xyz, RatFunc(gen.nonzero_polynomial(3, 2, 3))) : random_linear_form(gen, xyz));
    }
    std::vector<Rational> samples;
    for (long t = 0; t <= static_cast<long>(2 * kdeg); ++t) samples.push_back(Rational(t));
    r = veronese_check(f, samples);
    CHECK((r.verdict == VeroneseVerdict::integrable_everywhere) == veronese_poly(f).empty());
    CHECK(r.verdict != VeroneseVerdict::insufficient_samples);
  }
}

TEST_CASE("minimal degree") {
  CHECK(minimal_degree_check(1, 1, 1));
  CHECK(minimal_degree_check(2, 2, 1));
  CHECK_FALSE(minimal_degree_check(3, 2, 1));
  CHECK(minimal_degree_check(3, 3, 1));  // twisted cubic
  CHECK_THROWS_AS(minimal_degree_check(-1, 2, 1), InputError);
  CHECK_THROWS_AS(minimal_degree_check(1, 1, 2), InputError);
}

TEST_CASE("general position of four points") {
  const std::vector<RationalVector> frame = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  const std::vector<RationalVector> collinear = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  CHECK(general_position4(frame));
  CHECK_FALSE(general_position4(collinear));
  CHECK_THROWS_AS(general_position4(std::vector<RationalVector>(frame.begin(), frame.begin() + 3)), InputError);
  CHECK_THROWS_AS(general_position4(std::vector<RationalVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), InputError);

  Generator gen(97);
  auto det = [](const RationalVector& p, const RationalVector& q, const RationalVector& r) -> Rational {
    return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) + p[2] * (q[0] * r[1] - q[1] * r[0]);
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 4; ++i) {
      RationalVector v;
      do {
        v = {Rational(gen.integer(-1, 1)), Rational(gen.integer(-1, 1)), Rational(gen.integer(-1, 1))};
      } while (v == RationalVector{0, 0, 0});
      pts.push_back(v);
    }
    const bool expected = det(pts[0], pts[1], pts[2]) != 0 && det(pts[0], pts[1], pts[3]) != 0 &&
                          det(pts[0], pts[2], pts[3]) != 0 && det(pts[1], pts[2], pts[3]) != 0;
    CHECK(general_position4(pts) == expected);
  }
}

TEST_CASE("factorization of univariate polynomials") {
  using namespace folia::locus_detail;
  auto lin = [](Rational r) { return QPoly{-r, Rational(1)}; };
  auto sorted_factors = [](const QPoly& p) {
    auto f = distinct_irreducible_factors(p).factors;
    std::sort(f.begin(), f.end(), [](const QPoly& a, const QPoly& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return f;
  };

  const QPoly two = {Rational(-2), 0, 1};
  auto f = sorted_factors(mul(mul(lin(Rational(1, 2)), lin(-3)), two));
  REQUIRE(f.size() == 3);
  CHECK(f[2] == two);

  // s^4 + 4 = (s^2 + 2s + 2)(s^2 - 2s + 2)
  f = sorted_factors(QPoly{4, 0, 0, 0, 1});
  CHECK(f.size() == 2);
  CHECK(mul(f[0], f[1]) == QPoly{4, 0, 0, 0, 1});

  // minimal polynomial of sqrt 2 + sqrt 3
  f = sorted_factors(QPoly{1, 0, -10, 0, 1});
  CHECK(f.size() == 1);

  // repeated factors are reported once
  f = sorted_factors(mul(mul(lin(2), lin(2)), two));
  CHECK(f.size() == 2);

  Generator gen(101);
  for (int trial = 0; trial < 40; ++trial) {
    QPoly p = {gen.nonzero_rational()};
    std::vector<Rational> roots;
    const long n = gen.integer(1, 4);
    for (long i = 0; i < n; ++i) {
      const Rational r = gen.rational(7);
      p = mul(p, lin(r));
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    f = sorted_factors(p);
    CHECK(f.size() == roots.size());
    for (const auto& q : f) {
      REQUIRE(q.size() == 2);
      CHECK(std::find(roots.begin(), roots.end(), -q[0]) != roots.end());
    }
  }
}
