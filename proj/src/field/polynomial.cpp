#include "folia/field/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "folia/error.hpp"

namespace folia {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Exponents(nvars, 0), constant);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& coeff) {
  Polynomial p(exponents.size());
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

Rational Polynomial::constant_value() const {
  return coefficient(Exponents(nvars_, 0));
}

const Exponents& Polynomial::leading_exponents() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

std::optional<std::size_t> Polynomial::main_variable() const {
  std::optional<std::size_t> best;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = nvars_; i-- > 0;) {
      if (e[i] != 0) {
        if (!best || i > *best) best = i;
        break;
      }
    }
  }
  return best;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomial variable count mismatch");
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(nvars_, 1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw InputError("variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    Rational v = c;
    for (std::uint32_t k = 0; k < e[var]; ++k) v *= value;
    r.add_term(f, v);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::extended(std::size_t new_nvars) const {
  if (new_nvars < nvars_) throw InputError("cannot extend to fewer variables");
  Polynomial r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(new_nvars, 0);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial Polynomial::truncated(std::size_t new_nvars) const {
  Polynomial r(new_nvars);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = new_nvars; i < e.size(); ++i) {
      if (e[i] != 0) throw InputError("truncated variable still occurs");
    }
    r.terms_.emplace(Exponents(e.begin(), e.begin() + static_cast<long>(new_nvars)), c);
  }
  return r;
}

Polynomial Polynomial::remapped(std::span<const std::size_t> mapping,
                                std::size_t target_nvars) const {
  if (mapping.size() != nvars_) throw InputError("variable mapping has wrong size");
  Polynomial r(target_nvars);
  Exponents f(target_nvars);
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < nvars_; ++i) f[mapping[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  const int deg = degree_in(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(deg, 0)) + 1,
                              Polynomial(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(std::span<const Polynomial> coeffs,
                                         std::size_t var) {
  if (coeffs.empty()) throw InputError("empty coefficient list");
  Polynomial r(coeffs.front().nvars());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponents f = e;
      f[var] += static_cast<std::uint32_t>(k);
      r.add_term(f, c);
    }
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / leading_coefficient());
}

Rational Polynomial::integer_normalizer() const {
  if (terms_.empty()) return 1;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational r(den_lcm, num_gcd);
  r.canonicalize();
  return r;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << folia::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division

namespace {

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

}  // namespace

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.nvars() != b.nvars()) throw InputError("polynomial variable count mismatch");
  const std::size_t n = a.nvars();
  PolynomialBuilder quotient(n);
  PolynomialBuilder remainder(n);
  Polynomial p = a;
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Exponents shift(n);
  while (!p.is_zero()) {
    const Exponents lp = p.leading_exponents();
    const Rational cp = p.leading_coefficient();
    if (divides(lb, lp)) {
      for (std::size_t i = 0; i < n; ++i) shift[i] = lp[i] - lb[i];
      const Rational t = cp / cb;
      quotient.add(shift, t);
      PolynomialBuilder sub(n);
      Exponents e(n);
      for (const auto& [eb, c] : b.terms()) {
        for (std::size_t i = 0; i < n; ++i) e[i] = eb[i] + shift[i];
        sub.add(e, -t * c);
      }
      p += sub.take();
    } else {
      remainder.add(lp, cp);
      p -= Polynomial::monomial(lp, cp);
    }
  }
  return {quotient.take(), remainder.take()};
}

std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return Polynomial(a.nvars());
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.degree_in(i) < b.degree_in(i)) return std::nullopt;
  }
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw ArithmeticError("inexact polynomial division");
  return *std::move(q);
}

// ---------------------------------------------------------------------------
// GCD: recursive content / primitive-part scheme with primitive
// pseudo-remainder sequences in the main variable.

namespace {

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Primitive in `var` with integer coefficients of content 1.
Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  const Polynomial q = divide_exact(p, content_in(p, var));
  return q * q.integer_normalizer();
}

// Remainder of lc(b)^k * a modulo b, viewed as polynomials in var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  std::vector<Polynomial> ra = a.coefficients_in(var);
  const std::vector<Polynomial> cb = b.coefficients_in(var);
  const std::size_t n = cb.size() - 1;
  const Polynomial& lcb = cb.back();
  while (ra.size() > n && !ra.empty()) {
    if (ra.back().is_zero()) {
      ra.pop_back();
      continue;
    }
    const Polynomial lca = ra.back();
    const std::size_t shift = ra.size() - 1 - n;
    for (auto& c : ra) c = c * lcb;
    for (std::size_t k = 0; k <= n; ++k) ra[k + shift] -= lca * cb[k];
    ra.pop_back();
  }
  while (!ra.empty() && ra.back().is_zero()) ra.pop_back();
  if (ra.empty()) return Polynomial(a.nvars());
  return Polynomial::from_coefficients(ra, var);
}

Polynomial monomial_gcd(const Polynomial& m, const Polynomial& p) {
  Exponents e = m.leading_exponents();
  for (const auto& [f, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], f[i]);
  }
  return Polynomial::monomial(std::move(e), 1);
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(n, 1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a.total_degree() >= b.total_degree()) {
    if (try_divide_exact(a, b)) return b.monic();
  } else if (try_divide_exact(b, a)) {
    return a.monic();
  }

  const std::size_t var = std::max(*a.main_variable(), *b.main_variable());
  if (!a.contains(var)) return gcd_impl(a, content_in(b, var));
  if (!b.contains(var)) return gcd_impl(content_in(a, var), b);

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial c = gcd_impl(ca, cb);
  Polynomial p = divide_exact(a, ca);
  Polynomial q = divide_exact(b, cb);
  p *= p.integer_normalizer();
  q *= q.integer_normalizer();
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  Polynomial g(n, 1);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) {
      g = primitive_part(q, var);
      break;
    }
    if (!r.contains(var)) break;  // coprime in var
    p = std::move(q);
    q = primitive_part(r, var);
  }
  return (c * g).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw InputError("polynomial variable count mismatch");
  return gcd_impl(a, b);
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
  return divide_exact(a * b, gcd(a, b)).monic();
}

// ---------------------------------------------------------------------------
// Resultant via a fraction-free determinant of the Sylvester matrix.

namespace {

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  const std::size_t nvars = n ? m[0][0].nvars() : 0;
  if (n == 0) return Polynomial(nvars, 1);
  Polynomial prev(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(nvars);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Polynomial(nvars);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (a.nvars() != b.nvars()) throw InputError("polynomial variable count mismatch");
  const std::size_t nv = a.nvars();
  if (a.is_zero() || b.is_zero()) return Polynomial(nv);
  const auto ca = a.coefficients_in(var);
  const auto cb = b.coefficients_in(var);
  const std::size_t m = ca.size() - 1;
  const std::size_t n = cb.size() - 1;
  if (m == 0) return a.pow(static_cast<unsigned>(n));
  if (n == 0) return b.pow(static_cast<unsigned>(m));
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size, Polynomial(nv)));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = ca[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = cb[n - k];
  }
  return bareiss_determinant(std::move(s));
}

}  // namespace folia
