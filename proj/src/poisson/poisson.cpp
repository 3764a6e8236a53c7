#include "folia/poisson/poisson.hpp"

#include "folia/error.hpp"

namespace folia {

namespace {

void require_degree(const MultiVector& p, int degree, const char* what) {
  if (p.degree() != degree) throw InputError(std::string(what) + " must have degree " + std::to_string(degree));
}

IndexSet bit(std::size_t i) { return IndexSet{1} << i; }

// Antisymmetric components P^{ij}.
class Components {
 public:
  explicit Components(const MultiVector& p) : n_(p.nvars()), data_(n_ * n_, RatFunc(n_)) {
    for (const auto& [s, c] : p.terms()) {
      const auto idx = indices_of(s);
      data_[idx[0] * n_ + idx[1]] = c;
      data_[idx[1] * n_ + idx[0]] = -c;
    }
  }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<RatFunc> data_;
};

void require_poisson(const MultiVector& p, const char* what) {
  if (!is_poisson(p)) throw PreconditionError(std::string(what) + " is not Poisson");
}

}  // namespace

MultiVector schouten(const MultiVector& p, const MultiVector& q) {
  require_same_chart(p.chart(), q.chart());
  require_degree(p, 2, "first argument");
  require_degree(q, 2, "second argument");
  const std::size_t n = p.nvars();
  const Components P(p), Q(q);
  // derivatives d_l P^{jk}, d_l Q^{jk} for j < k
  std::vector<RatFunc> dp(n * n * n, RatFunc(n)), dq(n * n * n, RatFunc(n));
  auto at = [n](std::size_t l, std::size_t j, std::size_t k) { return (l * n + j) * n + k; };
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        dp[at(l, j, k)] = P(j, k).partial(l);
        dq[at(l, j, k)] = Q(j, k).partial(l);
        dp[at(l, k, j)] = -dp[at(l, j, k)];
        dq[at(l, k, j)] = -dq[at(l, j, k)];
      }
    }
  }
  MultiVector out(p.chart(), 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        RatFunc c(n);
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc) {
          for (std::size_t l = 0; l < n; ++l) {
            if (!P(l, t[0]).is_zero()) c += P(l, t[0]) * dq[at(l, t[1], t[2])];
            if (!Q(l, t[0]).is_zero()) c += Q(l, t[0]) * dp[at(l, t[1], t[2])];
          }
        }
        if (!c.is_zero()) out += MultiVector::basis(p.chart(), bit(i) | bit(j) | bit(k), c);
      }
    }
  }
  return out;
}

bool is_poisson(const MultiVector& p) { return schouten(p, p).is_zero(); }

bool pencil_compatible(const MultiVector& p, const MultiVector& q) {
  require_poisson(p, "first bivector");
  require_poisson(q, "second bivector");
  return schouten(p, q).is_zero();
}

MultiVector sharp(const MultiVector& p, const Form& alpha) {
  require_degree(p, 2, "bivector");
  if (alpha.degree() != 1) throw InputError("sharp needs a one-form");
  return interior(alpha, p);
}

RatFunc poisson_bracket(const MultiVector& p, const RatFunc& f, const RatFunc& g) {
  const Form df = ext_d(Form::scalar(p.chart(), f));
  const Form dg = ext_d(Form::scalar(p.chart(), g));
  return interior(dg, sharp(p, df)).as_scalar();
}

MultiVector scaling_defect(const RatFunc& f, const MultiVector& p) {
  require_poisson(p, "bivector");
  const MultiVector fp = f * p;
  const Form df = ext_d(Form::scalar(p.chart(), f));
  return schouten(fp, fp) - (f * Rational(2)) * wedge(sharp(p, df), p);
}

Form bivector_to_form(const MultiVector& p) {
  require_degree(p, 2, "bivector");
  if (p.nvars() != 3) throw InputError("bivector-form correspondence needs a three-variable chart");
  const Form volume = Form::basis(p.chart(), 0b111, RatFunc(3, 1));
  Form out(p.chart(), 1);
  for (const auto& [s, c] : p.terms()) {
    const auto idx = indices_of(s);
    const Form first = interior(MultiVector::coordinate(p.chart(), idx[0]), volume);
    out += c * interior(MultiVector::coordinate(p.chart(), idx[1]), first);
  }
  return out;
}

MultiVector form_to_bivector(const Form& eta) {
  if (eta.degree() != 1) throw InputError("expected a one-form");
  if (eta.nvars() != 3) throw InputError("bivector-form correspondence needs a three-variable chart");
  MultiVector out(eta.chart(), 2);
  for (const auto& [s, c] : eta.terms()) {
    const IndexSet pair = 0b111 & ~s;
    const MultiVector unit = MultiVector::basis(eta.chart(), pair, RatFunc(3, 1));
    const Rational sign = bivector_to_form(unit).coefficient(s).constant_value();
    out += unit * (c * sign);
  }
  return out;
}

std::size_t rank_at(const MultiVector& p, std::span<const Rational> point) {
  require_degree(p, 2, "bivector");
  const std::size_t n = p.nvars();
  if (point.size() != n) throw InputError("point has wrong dimension");
  RationalMatrix m(n, n);
  for (const auto& [s, c] : p.terms()) {
    const auto idx = indices_of(s);
    const Rational v = c.evaluate(point);
    m(idx[0], idx[1]) = v;
    m(idx[1], idx[0]) = -v;
  }
  return rank(m);
}

}  // namespace folia
