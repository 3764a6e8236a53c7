#pragma once

// Small random generators for property tests. Everything is seeded
// explicitly so failures reproduce.

#include <random>
#include <vector>

#include "folia/exterior/graded.hpp"
#include "folia/field/ratfunc.hpp"

namespace folia::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 5) {
    const long p = integer(-bound, bound);
    const long q = integer(1, bound);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long bound = 5) {
    Rational r = rational(bound);
    while (r == 0) r = rational(bound);
    return r;
  }

  Polynomial polynomial(std::size_t nvars, int max_degree = 2, int max_terms = 3) {
    Polynomial p(nvars);
    const int terms = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      Exponents e(nvars, 0);
      int budget = static_cast<int>(integer(0, max_degree));
      while (budget-- > 0) e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))] += 1;
      p += Polynomial::monomial(e, Rational(integer(-3, 3)));
    }
    return p;
  }

  Polynomial nonzero_polynomial(std::size_t nvars, int max_degree = 2, int max_terms = 3) {
    Polynomial p = polynomial(nvars, max_degree, max_terms);
    while (p.is_zero()) p = polynomial(nvars, max_degree, max_terms);
    return p;
  }

  RatFunc ratfunc(std::size_t nvars, bool allow_denominator = true) {
    Polynomial num = polynomial(nvars);
    if (!allow_denominator || integer(0, 2) == 0) return RatFunc(num);
    return RatFunc(num, nonzero_polynomial(nvars, 1, 2));
  }

  RatFunc nonzero_ratfunc(std::size_t nvars, bool allow_denominator = true) {
    RatFunc f = ratfunc(nvars, allow_denominator);
    while (f.is_zero()) f = ratfunc(nvars, allow_denominator);
    return f;
  }

  template <Variance V>
  Graded<V> graded(const Chart& chart, int degree, bool allow_denominator = false) {
    Graded<V> out(chart, degree);
    const std::size_t n = chart.size();
    if (static_cast<std::size_t>(degree) > n) return out;
    const IndexSet full = n == 64 ? ~IndexSet{0} : (IndexSet{1} << n) - 1;
    for (IndexSet s = 0; s <= full; ++s) {
      if (cardinality(s) != degree || integer(0, 1) == 0) continue;
      out += Graded<V>::basis(chart, s, ratfunc(n, allow_denominator));
      if (s == full) break;
    }
    return out;
  }

  Form form(const Chart& chart, int degree, bool allow_denominator = false) {
    return graded<Variance::covariant>(chart, degree, allow_denominator);
  }

  MultiVector multivector(const Chart& chart, int degree, bool allow_denominator = false) {
    return graded<Variance::contravariant>(chart, degree, allow_denominator);
  }

  std::vector<Rational> point(std::size_t n, long bound = 4) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rational(bound));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace folia::testing
