#include "folia/field/univariate.hpp"

#include "folia/error.hpp"

namespace folia {

FieldUniPoly::FieldUniPoly(std::size_t var, std::vector<RatFunc> coeffs)
    : nvars_(coeffs.empty() ? 0 : coeffs.front().nvars()), var_(var), coeffs_(std::move(coeffs)) {
  trim();
}

FieldUniPoly FieldUniPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  FieldUniPoly out(p.nvars(), var);
  if (p.is_zero()) return out;
  for (auto& c : p.coefficients_in(var)) out.coeffs_.emplace_back(std::move(c));
  out.trim();
  return out;
}

void FieldUniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldUniPoly operator+(const FieldUniPoly& a, const FieldUniPoly& b) {
  FieldUniPoly r(a.nvars_, a.var_);
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), RatFunc(a.nvars_));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  r.trim();
  return r;
}

FieldUniPoly operator-(const FieldUniPoly& a, const FieldUniPoly& b) {
  return a + b * RatFunc(b.nvars_, -1);
}

FieldUniPoly operator*(const FieldUniPoly& a, const FieldUniPoly& b) {
  FieldUniPoly r(a.nvars_, a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, RatFunc(a.nvars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

FieldUniPoly operator*(const FieldUniPoly& a, const RatFunc& c) {
  FieldUniPoly r = a;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

FieldUniPoly FieldUniPoly::derivative() const {
  FieldUniPoly r(nvars_, var_);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) r.coeffs_.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  r.trim();
  return r;
}

FieldUniPoly FieldUniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

RatFunc FieldUniPoly::to_ratfunc() const {
  RatFunc out(nvars_);
  const RatFunc x = RatFunc::variable(nvars_, var_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) out = out * x + coeffs_[k];
  return out;
}

std::pair<FieldUniPoly, FieldUniPoly> divmod(const FieldUniPoly& a, const FieldUniPoly& b) {
  if (b.is_zero()) throw ArithmeticError("univariate division by zero");
  FieldUniPoly q(a.nvars(), a.var());
  FieldUniPoly r = a;
  const RatFunc inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    std::vector<RatFunc> mono(shift + 1, RatFunc(a.nvars()));
    mono[shift] = r.leading() * inv;
    const FieldUniPoly t(a.var(), std::move(mono));
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

FieldUniPoly gcd(const FieldUniPoly& a, const FieldUniPoly& b) {
  FieldUniPoly x = a;
  FieldUniPoly y = b;
  while (!y.is_zero()) {
    FieldUniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// (s, t, g) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtGcd {
  FieldUniPoly s, t, g;
};

ExtGcd extended_gcd(const FieldUniPoly& a, const FieldUniPoly& b) {
  const std::size_t nv = a.nvars();
  const std::size_t var = a.var();
  FieldUniPoly r0 = a, r1 = b;
  FieldUniPoly s0(var, {RatFunc(nv, 1)}), s1(nv, var);
  FieldUniPoly t0(nv, var), t1(var, {RatFunc(nv, 1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FieldUniPoly s2 = s0 - q * s1;
    FieldUniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  const RatFunc inv = r0.leading().inverse();
  return {s0 * inv, t0 * inv, r0 * inv};
}

}  // namespace

std::pair<FieldUniPoly, FieldUniPoly> solve_diophantine(const FieldUniPoly& a, const FieldUniPoly& b,
                                                        const FieldUniPoly& c) {
  ExtGcd e = extended_gcd(a, b);
  auto [q, r] = divmod(c, e.g);
  if (!r.is_zero()) throw StructuralError("right-hand side not in the ideal (a, b)");
  FieldUniPoly s = q * e.s;
  FieldUniPoly t = q * e.t;
  if (!s.is_zero() && s.degree() >= b.degree()) {
    auto [q2, r2] = divmod(s, b);
    s = r2;
    t = t + q2 * a;
  }
  return {s, t};
}

namespace {

RatFunc integrate_polynomial(const FieldUniPoly& p) {
  const std::size_t nv = p.nvars();
  std::vector<RatFunc> out(p.coeffs().size() + 1, RatFunc(nv));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    out[k + 1] = p.coeffs()[k] * Rational(1, static_cast<long>(k + 1));
  }
  return FieldUniPoly(p.var(), std::move(out)).to_ratfunc();
}

}  // namespace

std::optional<RatFunc> rational_antiderivative(const RatFunc& f, std::size_t var) {
  const std::size_t nv = f.nvars();
  if (var >= nv) throw InputError("variable index out of range");
  if (f.is_zero()) return RatFunc(nv);
  const FieldUniPoly num = FieldUniPoly::from_polynomial(f.num(), var);
  const FieldUniPoly den = FieldUniPoly::from_polynomial(f.den(), var);
  auto [poly_part, a] = divmod(num, den);
  RatFunc result = integrate_polynomial(poly_part);
  if (a.is_zero()) return result;

  // Hermite reduction of a/den (proper fraction).
  FieldUniPoly d_minus = gcd(den, den.derivative());
  const FieldUniPoly d_star = divmod(den, d_minus).first;
  while (d_minus.degree() > 0) {
    const FieldUniPoly d_minus2 = gcd(d_minus, d_minus.derivative());
    const FieldUniPoly d_minus_star = divmod(d_minus, d_minus2).first;
    const FieldUniPoly lhs =
        divmod(d_star * d_minus.derivative(), d_minus).first * RatFunc(nv, -1);
    auto [b, c] = solve_diophantine(lhs, d_minus_star, a);
    a = c - divmod(b.derivative() * d_star, d_minus_star).first;
    result += b.to_ratfunc() / d_minus.to_ratfunc();
    d_minus = d_minus2;
  }
  // What remains is a / d_star with d_star squarefree: a nonzero proper
  // part integrates to logarithms.
  auto [q, r] = divmod(a, d_star);
  if (!r.is_zero()) return std::nullopt;
  result += integrate_polynomial(q);
  return result;
}

}  // namespace folia
