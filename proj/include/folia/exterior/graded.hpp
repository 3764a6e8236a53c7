#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "folia/exterior/chart.hpp"
#include "folia/field/linalg.hpp"
#include "folia/field/ratfunc.hpp"

namespace folia {

// Differential forms (covariant) and polyvector fields (contravariant)
// share one representation: a map from basis index sets to coefficients.
enum class Variance { covariant, contravariant };

// Strictly increasing index tuple encoded as a bit set (bit i = x_{i+1}).
using IndexSet = std::uint64_t;

// Lexicographic order of the increasing index tuples.
struct IndexSetOrder {
  bool operator()(IndexSet a, IndexSet b) const;
};

std::vector<std::size_t> indices_of(IndexSet s);
inline int cardinality(IndexSet s) { return __builtin_popcountll(s); }

template <Variance V>
class Graded {
 public:
  using TermMap = std::map<IndexSet, RatFunc, IndexSetOrder>;

  // Zero element of the given degree.
  Graded(Chart chart, int degree);

  static Graded scalar(Chart chart, RatFunc value);
  // d(x_i) for forms, D(x_i) for polyvectors.
  static Graded coordinate(Chart chart, std::size_t index);
  // coeff * e_{s} for an increasing index set s.
  static Graded basis(Chart chart, IndexSet s, RatFunc coeff);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(IndexSet s) const;
  // Coefficient of e_i for a degree-1 element.
  RatFunc component(std::size_t i) const;
  // Value of a degree-0 element.
  RatFunc as_scalar() const;

  Graded operator-() const;
  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const Graded& a, const RatFunc& f) { return a.scaled(f); }
  friend Graded operator*(const RatFunc& f, const Graded& a) { return a.scaled(f); }
  friend Graded operator*(const Graded& a, const Rational& c) { return a.scaled(RatFunc(a.nvars(), c)); }
  friend Graded operator*(const Rational& c, const Graded& a) { return a.scaled(RatFunc(a.nvars(), c)); }
  friend bool operator==(const Graded& a, const Graded& b) {
    return a.degree_ == b.degree_ && a.chart_ == b.chart_ && a.terms_ == b.terms_;
  }

  Graded scaled(const RatFunc& f) const;
  Graded map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const;
  // Same element on a chart that extends this one (new variables appended).
  Graded lifted(const Chart& bigger) const;
  // Substitutes the last chart variable by a rational value and drops it.
  Graded restricted(const Chart& smaller, const Rational& value) const;

  std::size_t nvars() const { return chart_.size(); }

  // Parseable text such as "x*d(x) /\ d(y) - (1/y)*d(z)".
  std::string to_string() const;

 private:
  void add(IndexSet s, const RatFunc& c);
  Chart chart_;
  int degree_;
  TermMap terms_;

  template <Variance W>
  friend Graded<W> wedge(const Graded<W>& a, const Graded<W>& b);
};

using Form = Graded<Variance::covariant>;
using MultiVector = Graded<Variance::contravariant>;

// Throws InputError on chart mismatch.
template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b);

// Exterior derivative.
Form ext_d(const Form& a);

// Contraction of a vector field into the first slot of a form. Throws
// InputError for degree-0 forms or a vector field of degree != 1.
Form interior(const MultiVector& v, const Form& a);
// Contraction of a one-form into the first slot of a polyvector.
MultiVector interior(const Form& alpha, const MultiVector& p);

// Lie derivative via Cartan's formula L_v a = i_v(da) + d(i_v a).
Form lie(const MultiVector& v, const Form& a);

// Q-linear relations among forms of a common degree on one chart.
std::vector<RationalVector> constant_relations(std::span<const Form> forms);
// Matrix of Q-coordinates of the forms (one column per form).
RationalMatrix coordinate_matrix(std::span<const Form> forms);

void require_same_chart(const Chart& a, const Chart& b);

extern template class Graded<Variance::covariant>;
extern template class Graded<Variance::contravariant>;

}  // namespace folia
