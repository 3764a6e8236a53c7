#include "folia/locus/locus.hpp"

#include <map>
#include <random>

#include "folia/error.hpp"
#include "locus/qpoly.hpp"

namespace folia {

using namespace locus_detail;

namespace {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // position of (i, j), i <= j, in the row-major upper triangle
  return i * n - i * (i + 1) / 2 + j;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector combine(const Rational& s, const RationalVector& u, const Rational& t, const RationalVector& w) {
  RationalVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = s * u[i] + t * w[i];
  return r;
}

Rational bilinear(const RationalMatrix& m, const RationalVector& u, const RationalVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s += u[i] * m(i, j) * v[j];
  }
  return s;
}

RationalVector linear_coefficients(const Polynomial& p, std::size_t n) {
  RationalVector v(n, 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 1) v[i] = c;
    }
  }
  return v;
}

Polynomial linear_polynomial(const RationalVector& v) {
  Polynomial p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p += Polynomial::variable(v.size(), i) * v[i];
  return p;
}

// p(T b): variable a_i becomes sum_j T(i, j) b_j.
Polynomial linear_substitute(const Polynomial& p, const RationalMatrix& t) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < t.rows(); ++i) images.push_back(linear_polynomial(t.row(i)));
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Polynomial term(p.nvars(), c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * images[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

// Line through the origin of Q^3 orthogonal to n: two spanning vectors.
std::pair<RationalVector, RationalVector> line_basis(const RationalVector& n) {
  const std::vector<RationalVector> k = kernel(RationalMatrix::from_rows({n}));
  return {k[0], k[1]};
}

bool line_in_quadric(const RationalMatrix& m, const RationalVector& n) {
  const auto [p, q] = line_basis(n);
  return bilinear(m, p, p) == 0 && bilinear(m, p, q) == 0 && bilinear(m, q, q) == 0;
}

LineComponent rational_line(RationalVector n, unsigned multiplicity) {
  LineComponent line;
  line.base = primitive_integer(std::move(n));
  line.offset = RationalVector(3, 0);
  line.multiplicity = multiplicity;
  const auto [p, q] = line_basis(line.base);
  line.samples = {primitive_integer(p), primitive_integer(q), primitive_integer(combine(1, p, 1, q))};
  line.minimal_degree = minimal_degree_check(1, 1, 1);
  return line;
}

std::optional<RationalVector> find_rational_point(const RationalMatrix& m, long bound) {
  for (long r = 1; r <= bound; ++r) {
    for (long a = -r; a <= r; ++a) {
      for (long b = -r; b <= r; ++b) {
        for (long c = -r; c <= r; ++c) {
          if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != r) continue;
          const RationalVector v = {Rational(a), Rational(b), Rational(c)};
          if (bilinear(m, v, v) == 0) return primitive_integer(v);
        }
      }
    }
  }
  return std::nullopt;
}

bool projectively_new(const std::vector<RationalVector>& seen, const RationalVector& v) {
  for (const auto& s : seen) {
    if (is_zero(cross(s, v))) return false;
  }
  return true;
}

// Rational points on a conic through p: second intersection with lines p + lambda d.
std::vector<RationalVector> conic_samples(const RationalMatrix& m, const RationalVector& p, std::size_t want) {
  std::vector<RationalVector> out = {p};
  for (long a = -3; a <= 3 && out.size() < want; ++a) {
    for (long b = -3; b <= 3 && out.size() < want; ++b) {
      for (long c = -3; c <= 3 && out.size() < want; ++c) {
        const RationalVector d = {Rational(a), Rational(b), Rational(c)};
        const Rational dd = bilinear(m, d, d);
        if (dd == 0) continue;
        const Rational lambda = -2 * bilinear(m, p, d) / dd;
        const RationalVector x = combine(1, p, lambda, d);
        if (is_zero(x) || !projectively_new(out, x)) continue;
        out.push_back(primitive_integer(x));
      }
    }
  }
  return out;
}

RationalVector standard(std::size_t i) {
  RationalVector e(3, 0);
  e[i] = 1;
  return e;
}

struct PointSearch {
  std::vector<PointComponent> points;
  bool ok = false;
};

// Common zeros of the ternary quadrics qs (no common factor) through a
// generic pencil pair L1, L2, a generic linear change a = T b, and the
// resultant in b2 dehomogenized at b0 = 1.
PointSearch solve_points(const std::vector<Polynomial>& qs, const Polynomial& l1, const Polynomial& l2,
                         const RationalMatrix& t) {
  PointSearch out;
  const Polynomial a = linear_substitute(l1, t);
  const Polynomial b = linear_substitute(l2, t);
  const auto ca = a.coefficients_in(2);
  const auto cb = b.coefficients_in(2);
  if (ca.size() != 3 || cb.size() != 3) return out;
  const Polynomial r = resultant(a, b, 2);
  if (r.is_zero()) return out;
  const QPoly rd = from_polynomial(r.substitute(0, 1), 1);
  if (degree(rd) != r.total_degree()) return out;  // a root at b0 = 0
  const QPoly alpha = from_polynomial((cb[2] * ca[1] - ca[2] * cb[1]).substitute(0, 1), 1);
  const QPoly beta = from_polynomial((cb[2] * ca[0] - ca[2] * cb[0]).substitute(0, 1), 1);
  std::vector<Polynomial> moved;
  for (const auto& q : qs) moved.push_back(linear_substitute(q, t));
  for (const auto& p : distinct_irreducible_factors(rd).factors) {
    QPoly b2;
    if (const auto inv = inverse_mod(alpha, p)) {
      b2 = mod(scale(mul(beta, *inv), -1), p);
    } else {
      // A and B proportional over the root: a multiple point is the double
      // root of A in b2, two distinct points over one root need another T
      const QPoly a0 = from_polynomial(ca[0].substitute(0, 1), 1);
      const QPoly a1 = from_polynomial(ca[1].substitute(0, 1), 1);
      const Rational a2 = ca[2].constant_value();
      if (!mod(sub(mul(a1, a1), scale(a0, 4 * a2)), p).empty()) return out;
      b2 = mod(scale(a1, -1 / (2 * a2)), p);
    }
    const std::vector<QPoly> point = {QPoly{Rational(1)}, mod(QPoly{Rational(0), Rational(1)}, p), b2};
    if (!evaluate_mod(a, point, p).empty() || !evaluate_mod(b, point, p).empty()) return out;
    bool common = true;
    for (const auto& q : moved) common = common && evaluate_mod(q, point, p).empty();
    if (!common) continue;
    PointComponent pc;
    pc.minimal_polynomial = p;
    for (std::size_t i = 0; i < 3; ++i) {
      QPoly c;
      for (std::size_t j = 0; j < 3; ++j) c = add(c, scale(point[j], t(i, j)));
      pc.coordinates.push_back(mod(c, p));
    }
    pc.minimal_degree = minimal_degree_check(1, 0, 0);
    out.points.push_back(std::move(pc));
  }
  out.ok = true;
  return out;
}

std::vector<PointComponent> finite_points(const std::vector<Polynomial>& qs) {
  std::mt19937_64 rng(20240611);
  auto small = [&](long lo, long hi) { return Rational(std::uniform_int_distribution<long>(lo, hi)(rng)); };
  for (int attempt = 0; attempt < 200; ++attempt) {
    Polynomial l1 = qs[0], l2 = qs[1];
    if (attempt > 0) {
      l1 = Polynomial(3);
      l2 = Polynomial(3);
      for (const auto& q : qs) {
        l1 += q * small(-3, 3);
        l2 += q * small(-3, 3);
      }
    }
    if (l1.is_zero() || l2.is_zero() || !gcd(l1, l2).is_constant()) continue;
    RationalMatrix t(3, 3);
    for (std::size_t i = 0; i < 3; ++i) t(i, i) = 1;
    if (attempt > 0) {
      do {
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) t(i, j) = small(-2, 2);
        }
      } while (determinant(t) == 0);
    }
    PointSearch s = solve_points(qs, l1, l2, t);
    if (s.ok) return std::move(s.points);
  }
  throw StructuralError("could not bring the quadrics into general position");
}

bool point_on_quadrics(const PointComponent& pc, const std::vector<Polynomial>& qs) {
  for (const auto& q : qs) {
    if (!evaluate_mod(q, pc.coordinates, pc.minimal_polynomial).empty()) return false;
  }
  return true;
}

}  // namespace

Polynomial QuadricSystem::polynomial(std::size_t k) const {
  const RationalMatrix& m = quadrics.at(k);
  Polynomial p(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t j = i; j < dimension; ++j) {
      if (m(i, j) == 0) continue;
      const Rational c = i == j ? m(i, j) : 2 * m(i, j);
      p += Polynomial::variable(dimension, i) * Polynomial::variable(dimension, j) * c;
    }
  }
  return p;
}

Rational QuadricSystem::evaluate(std::size_t k, std::span<const Rational> a) const {
  const RationalVector v(a.begin(), a.end());
  return bilinear(quadrics.at(k), v, v);
}

bool QuadricSystem::vanishes_at(std::span<const Rational> a) const {
  if (a.size() != dimension) throw InputError("point has wrong dimension");
  for (std::size_t k = 0; k < quadrics.size(); ++k) {
    if (evaluate(k, a) != 0) return false;
  }
  return true;
}

QuadricSystem cone_quadrics(const FormSpace& space) {
  const std::size_t n = space.dimension();
  std::vector<Form> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Form t = wedge(space[i], ext_d(space[j]));
      if (i != j) t += wedge(space[j], ext_d(space[i]));
      products.push_back(std::move(t));
    }
  }
  QuadricSystem sys;
  sys.dimension = n;
  const RationalMatrix coords = coordinate_matrix(std::span<const Form>(products));
  if (coords.rows() == 0) return sys;
  for (const auto& row : row_space_basis(coords)) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = row[pair_index(i, i, n)];
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = row[pair_index(i, j, n)] / 2;
    }
    sys.quadrics.push_back(std::move(m));
  }
  return sys;
}

bool membership(const FormSpace& space, std::span<const Rational> a) {
  if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
    throw InputError("membership of the zero vector");
  }
  return is_integrable(space.combination(a));
}

std::string to_string(LocusKind k) {
  switch (k) {
    case LocusKind::whole_plane: return "whole-plane";
    case LocusKind::finite_points: return "finite-points";
    case LocusKind::line: return "line";
    case LocusKind::smooth_conic: return "smooth-conic";
    case LocusKind::two_lines: return "two-lines";
    case LocusKind::double_line: return "double-line";
    case LocusKind::line_plus_points: return "line-plus-points";
    case LocusKind::curve_forces_plane: return "curve-forces-plane";
  }
  return "unknown";
}

std::optional<RationalVector> PointComponent::rational() const {
  if (count() != 1) return std::nullopt;
  RationalVector v;
  for (const auto& c : coordinates) v.push_back(c.empty() ? Rational(0) : c[0]);
  return primitive_integer(v);
}

std::size_t LocusReport::point_count() const {
  std::size_t n = 0;
  for (const auto& p : points) n += p.count();
  return n;
}

LocusReport classify_plane_locus(const FormSpace& space) {
  if (space.dimension() != 3) throw InputError("plane locus needs a three-dimensional space");
  LocusReport r;
  r.system = cone_quadrics(space);
  const std::size_t count = r.system.quadrics.size();
  std::vector<Polynomial> qs;
  for (std::size_t k = 0; k < count; ++k) qs.push_back(r.system.polynomial(k));
  auto member = [&](const RationalVector& v) { return membership(space, v); };
  bool ok = true;

  if (count == 0) {
    r.kind = LocusKind::whole_plane;
    r.plane_samples = {standard(0), standard(1), standard(2), {1, 1, 1}, {1, 2, 3}};
    for (const auto& v : r.plane_samples) ok = ok && member(v);
  } else if (count == 1) {
    const RationalMatrix& m = r.system.quadrics[0];
    const std::size_t rk = rank(m);
    if (rk == 3) {
      r.kind = LocusKind::smooth_conic;
      ConicComponent conic{m, {}, minimal_degree_check(2, 2, 1)};
      if (auto p = find_rational_point(m, 12)) {
        conic.samples = conic_samples(m, *p, 5);
      } else {
        r.notes.push_back("no rational point with coordinates up to 12; conic given by its equation only");
      }
      for (const auto& v : conic.samples) ok = ok && bilinear(m, v, v) == 0 && member(v);
      r.conic = std::move(conic);
    } else if (rk == 2) {
      r.kind = LocusKind::two_lines;
      const RationalVector v = kernel(m).front();
      // u, w complete the singular point v to a basis
      RationalVector u, w;
      for (std::size_t i = 0; i < 3 && u.empty(); ++i) {
        for (std::size_t j = i + 1; j < 3 && u.empty(); ++j) {
          if (dot(v, cross(standard(i), standard(j))) != 0) {
            u = standard(i);
            w = standard(j);
          }
        }
      }
      const Rational A = bilinear(m, u, u), B = bilinear(m, u, w), C = bilinear(m, w, w);
      const Rational D = B * B - A * C;
      Rational root;
      bool rational_root = false;
      if (D > 0 && mpz_perfect_square_p(D.get_num_mpz_t()) && mpz_perfect_square_p(D.get_den_mpz_t())) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), D.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), D.get_den_mpz_t());
        root = Rational(n, d);
        root.canonicalize();
        rational_root = true;
      }
      if (A == 0) {
        r.lines.push_back(rational_line(cross(v, u), 1));
        r.lines.push_back(rational_line(cross(v, combine(C, u, -2 * B, w)), 1));
      } else if (rational_root) {
        r.lines.push_back(rational_line(cross(v, combine(-B + root, u, A, w)), 1));
        r.lines.push_back(rational_line(cross(v, combine(-B - root, u, A, w)), 1));
      } else {
        // n = v x ((-B +- sqrt(D)) u + A w); sqrt(p/q) = sqrt(p q) / q
        LineComponent pair;
        const Integer radicand = D.get_num() * D.get_den();
        RationalVector base = cross(v, combine(-B, u, A, w));
        RationalVector offset = cross(v, u);
        for (auto& x : offset) x /= Rational(D.get_den());
        RationalVector joint = base;
        joint.insert(joint.end(), offset.begin(), offset.end());
        RationalVector scaled = primitive_integer(joint);
        const Rational factor = [&]() -> Rational {
          for (std::size_t i = 0; i < joint.size(); ++i) {
            if (joint[i] != 0) return scaled[i] / joint[i];
          }
          return Rational(1);
        }();
        for (auto& x : base) x *= factor;
        for (auto& x : offset) x *= factor;
        pair.base = base;
        pair.offset = offset;
        pair.radicand = Rational(radicand);
        pair.samples = {primitive_integer(v)};
        pair.minimal_degree = minimal_degree_check(1, 1, 1);
        // (base . a)^2 - radicand (offset . a)^2 must be proportional to the quadric
        const Polynomial lb = linear_polynomial(base), lo = linear_polynomial(offset);
        const Polynomial product = lb * lb - lo * lo * pair.radicand;
        ok = ok && product * qs[0].leading_coefficient() == qs[0] * product.leading_coefficient();
        r.lines.push_back(std::move(pair));
      }
    } else {
      r.kind = LocusKind::double_line;
      RationalVector n;
      for (std::size_t i = 0; i < 3 && n.empty(); ++i) {
        if (!is_zero(m.row(i))) n = m.row(i);
      }
      r.lines.push_back(rational_line(n, 2));
    }
    for (const auto& line : r.lines) {
      if (line.conjugate_pair()) {
        for (const auto& s : line.samples) ok = ok && member(s);
        continue;
      }
      ok = ok && line_in_quadric(m, line.base);
      for (const auto& s : line.samples) ok = ok && member(s);
    }
  } else {
    Polynomial g = qs[0];
    for (std::size_t k = 1; k < count; ++k) g = gcd(g, qs[k]);
    if (g.total_degree() == 1) {
      const RationalVector n = linear_coefficients(g, 3);
      r.lines.push_back(rational_line(n, 1));
      std::vector<RationalVector> residual;
      for (const auto& q : qs) residual.push_back(linear_coefficients(divide_exact(q, g), 3));
      const RationalMatrix rm = RationalMatrix::from_rows(residual);
      r.kind = LocusKind::line;
      if (rank(rm) == 2) {
        const RationalVector p = primitive_integer(kernel(rm).front());
        if (dot(n, p) != 0) {
          r.kind = LocusKind::line_plus_points;
          PointComponent pc;
          pc.minimal_polynomial = {Rational(0), Rational(1)};
          for (const auto& x : p) pc.coordinates.push_back(x == 0 ? QPoly{} : QPoly{x});
          pc.minimal_degree = minimal_degree_check(1, 0, 0);
          r.points.push_back(std::move(pc));
        }
      }
    } else if (g.is_constant()) {
      r.kind = LocusKind::finite_points;
      r.points = finite_points(qs);
      if (r.point_count() > 4) {
        r.kind = LocusKind::curve_forces_plane;
        r.notes.push_back("more than four points: five of them determine a conic inside the locus");
      }
    } else {
      throw StructuralError("independent quadrics share a quadratic factor");
    }
    for (const auto& line : r.lines) {
      for (const auto& m : r.system.quadrics) ok = ok && line_in_quadric(m, line.base);
      for (const auto& s : line.samples) ok = ok && member(s);
    }
    for (const auto& p : r.points) {
      ok = ok && point_on_quadrics(p, qs);
      if (auto v = p.rational()) ok = ok && member(*v);
    }
  }
  r.verified = ok;
  return r;
}

std::vector<Form> veronese_poly(std::span<const Form> family) {
  if (family.size() < 2) throw InputError("a Veronese family needs at least two forms");
  for (const auto& w : family) {
    require_same_chart(family.front().chart(), w.chart());
    if (w.degree() != 1) throw InputError("family members must be one-forms");
  }
  const std::size_t k = family.size() - 1;
  std::vector<Form> d;
  for (const auto& w : family) d.push_back(ext_d(w));
  std::vector<Form> out(2 * k + 1, Form(family.front().chart(), 3));
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j <= k; ++j) out[i + j] += wedge(family[i], d[j]);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::string to_string(VeroneseVerdict v) {
  switch (v) {
    case VeroneseVerdict::integrable_everywhere: return "integrable-everywhere";
    case VeroneseVerdict::not_integrable: return "not-integrable";
    case VeroneseVerdict::insufficient_samples: return "insufficient-samples";
  }
  return "unknown";
}

VeroneseReport veronese_check(std::span<const Form> family, std::span<const Rational> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i] == samples[j]) throw InputError("repeated sample");
    }
  }
  const std::vector<Form> poly = veronese_poly(family);
  VeroneseReport r;
  r.degree = static_cast<int>(poly.size()) - 1;
  r.family_degree = family.size() - 1;
  r.sample_count = samples.size();
  r.sufficient_count = r.family_degree + 3;
  r.sufficient_count_applies = family.front().nvars() == r.family_degree + 1;
  for (const auto& t : samples) {
    Form value(family.front().chart(), 3);
    Rational power = 1;
    for (const auto& c : poly) {
      value += c * power;
      power *= t;
    }
    if (!value.is_zero()) {
      r.verdict = VeroneseVerdict::not_integrable;
      r.witness = t;
      return r;
    }
  }
  r.verdict = static_cast<long>(samples.size()) > r.degree ? VeroneseVerdict::integrable_everywhere
                                                          : VeroneseVerdict::insufficient_samples;
  return r;
}

bool minimal_degree_check(long degree, long span_dimension, long dimension) {
  if (degree < 0 || span_dimension < 0 || dimension < 0) throw InputError("negative degree or dimension");
  if (dimension > span_dimension) throw InputError("dimension exceeds span dimension");
  return degree == span_dimension - dimension + 1;
}

bool general_position4(std::span<const RationalVector> points) {
  if (points.size() < 4) throw InputError("need at least four points");
  for (const auto& p : points) {
    if (p.size() != 3) throw InputError("points need three homogeneous coordinates");
    if (is_zero(p)) throw InputError("zero vector is not a projective point");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (dot(points[i], cross(points[j], points[k])) == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace folia
