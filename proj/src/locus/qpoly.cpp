#include "locus/qpoly.hpp"

#include "folia/error.hpp"

namespace folia::locus_detail {

QPoly trimmed(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trimmed(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) { return add(a, scale(b, -1)); }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trimmed(std::move(r));
}

QPoly scale(const QPoly& a, const Rational& c) {
  QPoly r = a;
  for (auto& x : r) x *= c;
  return trimmed(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw ArithmeticError("division by the zero polynomial");
  QPoly r = trimmed(a);
  QPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= f * b[k];
    r = trimmed(std::move(r));
  }
  return {trimmed(std::move(q)), r};
}

QPoly mod(const QPoly& a, const QPoly& m) { return divmod(a, m).second; }

QPoly monic(const QPoly& a) { return a.empty() ? a : scale(a, 1 / a.back()); }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = trimmed(a), y = trimmed(b);
  while (!y.empty()) {
    QPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * Rational(static_cast<long>(k)));
  return trimmed(std::move(r));
}

Rational evaluate(const QPoly& a, const Rational& x) {
  Rational v = 0;
  for (std::size_t k = a.size(); k-- > 0;) v = v * x + a[k];
  return v;
}

std::optional<QPoly> inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = mod(a, m);
  QPoly t0, t1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) return std::nullopt;
  return mod(scale(t0, 1 / r0[0]), m);
}

QPoly from_polynomial(const Polynomial& p, std::size_t var) {
  QPoly r;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) throw InputError("polynomial is not univariate");
    }
    const std::size_t k = e[var];
    if (r.size() <= k) r.resize(k + 1);
    r[k] += c;
  }
  return trimmed(std::move(r));
}

QPoly evaluate_mod(const Polynomial& p, const std::vector<QPoly>& point, const QPoly& m) {
  QPoly total;
  for (const auto& [e, c] : p.terms()) {
    QPoly term = {c};
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = mod(mul(term, point[i]), m);
    }
    total = add(total, term);
  }
  return mod(total, m);
}

namespace {

int sign(const Rational& r) { return sgn(r); }

// Sturm chain of a squarefree polynomial.
std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain = {p, derivative(p)};
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    QPoly r = mod(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

int sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(evaluate(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a squarefree monic polynomial with integer
// coefficients, by Sturm isolation down to intervals shorter than 1.
void integer_roots_in(const QPoly& p, const std::vector<QPoly>& chain, Rational lo, Rational hi,
                      std::vector<Integer>& out) {
  const int count = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (count == 0) return;
  if (hi - lo < 1) {
    // at most one integer in (lo, hi]
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (Rational(n) > lo && evaluate(p, Rational(n)) == 0) out.push_back(n);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  integer_roots_in(p, chain, lo, mid, out);
  integer_roots_in(p, chain, mid, hi, out);
}

std::vector<Rational> rational_roots(const QPoly& f) {
  const QPoly sq = monic(divmod(f, gcd(f, derivative(f))).first);
  if (degree(sq) < 1) return {};
  // u = L s turns the monic sq into a monic integer polynomial g.
  Integer L = 1;
  for (const auto& c : sq) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  const int d = degree(sq);
  QPoly g(sq.size());
  Rational power = 1;
  for (int k = d; k >= 0; --k) {
    g[static_cast<std::size_t>(k)] = sq[static_cast<std::size_t>(k)] * power;
    power *= Rational(L);
  }
  Rational bound = 1;
  for (const auto& c : g) bound = std::max(bound, Rational(abs(c) + 1));
  const std::vector<QPoly> chain = sturm_chain(g);
  std::vector<Integer> roots;
  integer_roots_in(g, chain, -bound, bound, roots);
  std::vector<Rational> out;
  for (const auto& u : roots) {
    Rational r(u, L);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

// Split of a monic quartic without rational roots into two rational
// quadratics, via rational roots y = q + s of the resolvent cubic.
std::optional<std::pair<QPoly, QPoly>> split_quartic(const QPoly& f) {
  const Rational& e = f[0];
  const Rational& d = f[1];
  const Rational& c = f[2];
  const Rational& b = f[3];
  const QPoly resolvent = {-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, Rational(1)};
  for (const auto& y : rational_roots(resolvent)) {
    const auto r1 = rational_sqrt(y * y - 4 * e);
    const auto r2 = rational_sqrt(b * b - 4 * (c - y));
    if (!r1 || !r2) continue;
    const Rational q = (y + *r1) / 2, s = (y - *r1) / 2;
    for (int sgn2 : {1, -1}) {
      const Rational p = (b + sgn2 * *r2) / 2, r = (b - sgn2 * *r2) / 2;
      const QPoly left = {q, p, Rational(1)};
      const QPoly right = {s, r, Rational(1)};
      if (mul(left, right) == f) return std::make_pair(left, right);
    }
  }
  return std::nullopt;
}

}  // namespace

Factorization distinct_irreducible_factors(const QPoly& p) {
  if (p.empty()) throw InputError("factorization of the zero polynomial");
  if (degree(p) > 4) throw InputError("factorization is limited to degree 4");
  Factorization out;
  QPoly rest = monic(divmod(p, gcd(p, derivative(p))).first);
  for (const auto& r : rational_roots(rest)) {
    const QPoly linear = {-r, Rational(1)};
    out.factors.push_back(linear);
    rest = divmod(rest, linear).first;
  }
  if (degree(rest) == 4) {
    if (auto split = split_quartic(rest)) {
      out.factors.push_back(split->first);
      out.factors.push_back(split->second);
      return out;
    }
  }
  if (degree(rest) > 0) out.factors.push_back(rest);
  return out;
}

}  // namespace folia::locus_detail
