#include "folia/exterior/graded.hpp"

#include <set>
#include <sstream>

#include "folia/error.hpp"

namespace folia {

bool IndexSetOrder::operator()(IndexSet a, IndexSet b) const {
  if (a == b) return false;
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  if (ca != cb) return ca < cb;
  // The set holding the lowest differing index comes first.
  const IndexSet diff = a ^ b;
  const IndexSet low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<std::size_t> indices_of(IndexSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(s)));
    s &= s - 1;
  }
  return out;
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw InputError("objects live on different charts");
}

namespace {

IndexSet bit(std::size_t i) { return IndexSet{1} << i; }

IndexSet below(std::size_t i) { return bit(i) - 1; }

// Parity of the permutation sorting the concatenation (a, b) of two
// disjoint increasing tuples.
bool wedge_sign_negative(IndexSet a, IndexSet b) {
  int inversions = 0;
  for (IndexSet rest = b; rest != 0; rest &= rest - 1) {
    const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(rest));
    inversions += cardinality(a & ~(below(j) | bit(j)));
  }
  return (inversions & 1) != 0;
}

}  // namespace

template <Variance V>
Graded<V>::Graded(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw InputError("negative degree");
}

template <Variance V>
Graded<V> Graded<V>::scalar(Chart chart, RatFunc value) {
  if (value.nvars() != chart.size()) throw InputError("coefficient lives in the wrong number of variables");
  Graded g(std::move(chart), 0);
  g.add(0, value);
  return g;
}

template <Variance V>
Graded<V> Graded<V>::coordinate(Chart chart, std::size_t index) {
  if (index >= chart.size()) throw InputError("coordinate index out of range");
  const std::size_t n = chart.size();
  Graded g(std::move(chart), 1);
  g.add(bit(index), RatFunc(n, 1));
  return g;
}

template <Variance V>
Graded<V> Graded<V>::basis(Chart chart, IndexSet s, RatFunc coeff) {
  if (chart.size() < 64 && (s >> chart.size()) != 0) throw InputError("basis index out of range");
  if (coeff.nvars() != chart.size()) throw InputError("coefficient lives in the wrong number of variables");
  Graded g(std::move(chart), cardinality(s));
  g.add(s, coeff);
  return g;
}

template <Variance V>
void Graded<V>::add(IndexSet s, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <Variance V>
RatFunc Graded<V>::coefficient(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RatFunc(nvars()) : it->second;
}

template <Variance V>
RatFunc Graded<V>::component(std::size_t i) const {
  if (degree_ != 1) throw InputError("component() needs a degree-1 element");
  return coefficient(bit(i));
}

template <Variance V>
RatFunc Graded<V>::as_scalar() const {
  if (degree_ != 0) throw InputError("expected a function (degree 0)");
  return coefficient(0);
}

template <Variance V>
Graded<V> Graded<V>::operator-() const {
  Graded r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

template <Variance V>
Graded<V>& Graded<V>::operator+=(const Graded& other) {
  require_same_chart(chart_, other.chart_);
  if (degree_ != other.degree_) throw InputError("cannot add elements of different degrees");
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

template <Variance V>
Graded<V>& Graded<V>::operator-=(const Graded& other) {
  return *this += -other;
}

template <Variance V>
Graded<V> Graded<V>::scaled(const RatFunc& f) const {
  Graded r(chart_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, c * f);
  return r;
}

template <Variance V>
Graded<V> Graded<V>::map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const {
  Graded r(chart_, degree_);
  for (const auto& [s, c] : terms_) r.add(s, fn(c));
  return r;
}

template <Variance V>
Graded<V> Graded<V>::lifted(const Chart& bigger) const {
  if (bigger.size() < nvars()) throw InputError("target chart is smaller");
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (bigger.name(i) != chart_.name(i)) throw InputError("target chart does not extend this chart");
  }
  Graded r(bigger, degree_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, c.extended(bigger.size()));
  return r;
}

template <Variance V>
Graded<V> Graded<V>::restricted(const Chart& smaller, const Rational& value) const {
  if (smaller.size() + 1 != nvars()) throw InputError("restriction drops exactly one variable");
  const std::size_t last = smaller.size();
  Graded r(smaller, degree_);
  for (const auto& [s, c] : terms_) {
    if (s & bit(last)) continue;  // dz := 0
    r.add(s, c.substitute(last, value).truncated(smaller.size()));
  }
  return r;
}

template <Variance V>
std::string Graded<V>::to_string() const {
  const char* op = V == Variance::covariant ? "d(" : "D(";
  auto basis_text = [&](IndexSet s) {
    std::string out;
    for (auto i : indices_of(s)) {
      if (!out.empty()) out += " /\\ ";
      out += op + chart_.name(i) + ")";
    }
    return out;
  };
  if (degree_ == 0) return coefficient(0).to_string(chart_.names());
  if (terms_.empty()) {
    if (static_cast<std::size_t>(degree_) > nvars()) return "0";
    return "0*" + basis_text(below(static_cast<std::size_t>(degree_)));
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const bool negative = c.num().leading_coefficient() < 0;
    const RatFunc mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (!(mag.is_constant() && mag.constant_value() == 1)) {
      const std::string t = mag.to_string(chart_.names());
      const bool bare = t.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_^*") ==
                        std::string::npos;
      os << (bare ? t : "(" + t + ")") << '*';
    }
    os << basis_text(s);
  }
  return os.str();
}

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b) {
  require_same_chart(a.chart(), b.chart());
  Graded<V> r(a.chart(), a.degree() + b.degree());
  if (static_cast<std::size_t>(r.degree()) > a.nvars()) return r;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (sa & sb) continue;
      RatFunc c = ca * cb;
      if (wedge_sign_negative(sa, sb)) c = -c;
      r.add(sa | sb, c);
    }
  }
  return r;
}

template class Graded<Variance::covariant>;
template class Graded<Variance::contravariant>;
template Form wedge(const Form&, const Form&);
template MultiVector wedge(const MultiVector&, const MultiVector&);

Form ext_d(const Form& a) {
  const std::size_t n = a.nvars();
  Form r(a.chart(), a.degree() + 1);
  for (const auto& [s, c] : a.terms()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s & bit(k)) continue;
      RatFunc dc = c.partial(k);
      if (dc.is_zero()) continue;
      if (cardinality(s & below(k)) & 1) dc = -dc;
      r += Form::basis(a.chart(), s | bit(k), dc);
    }
  }
  return r;
}

namespace {

template <Variance Out, Variance In>
Graded<Out> contract_first_slot(const Graded<In>& vec, const Graded<Out>& target) {
  require_same_chart(vec.chart(), target.chart());
  if (vec.degree() != 1) throw InputError("contraction needs a degree-1 argument");
  if (target.degree() == 0) throw InputError("cannot contract into a function");
  Graded<Out> r(target.chart(), target.degree() - 1);
  for (const auto& [s, c] : target.terms()) {
    for (auto k : indices_of(s)) {
      const RatFunc vk = vec.coefficient(bit(k));
      if (vk.is_zero()) continue;
      RatFunc term = vk * c;
      if (cardinality(s & below(k)) & 1) term = -term;
      r += Graded<Out>::basis(target.chart(), s & ~bit(k), term);
    }
  }
  return r;
}

}  // namespace

Form interior(const MultiVector& v, const Form& a) { return contract_first_slot(v, a); }

MultiVector interior(const Form& alpha, const MultiVector& p) { return contract_first_slot(alpha, p); }

Form lie(const MultiVector& v, const Form& a) {
  if (v.degree() != 1) throw InputError("Lie derivative needs a vector field");
  require_same_chart(v.chart(), a.chart());
  Form r = interior(v, ext_d(a));
  if (a.degree() > 0) r += ext_d(interior(v, a));
  return r;
}

RationalMatrix coordinate_matrix(std::span<const Form> forms) {
  if (forms.empty()) return RationalMatrix(0, 0);
  std::set<IndexSet, IndexSetOrder> sets;
  for (const auto& f : forms) {
    require_same_chart(forms.front().chart(), f.chart());
    if (f.degree() != forms.front().degree()) throw InputError("forms of different degrees");
    for (const auto& [s, c] : f.terms()) sets.insert(s);
  }
  std::vector<RationalVector> rows;
  for (auto s : sets) {
    std::vector<RatFunc> column;
    column.reserve(forms.size());
    for (const auto& f : forms) column.push_back(f.coefficient(s));
    const RationalMatrix block = coordinate_matrix(std::span<const RatFunc>(column));
    for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
  }
  if (rows.empty()) return RationalMatrix(0, forms.size());
  return RationalMatrix::from_rows(rows);
}

std::vector<RationalVector> constant_relations(std::span<const Form> forms) {
  if (forms.empty()) return {};
  RationalMatrix m = coordinate_matrix(forms);
  if (m.rows() == 0) {
    // all forms are zero: a single zero row keeps the kernel computation uniform
    m = RationalMatrix(1, forms.size());
  }
  return kernel(m);
}

}  // namespace folia
