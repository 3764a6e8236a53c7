#include "folia/field/linalg.hpp"

#include <algorithm>
#include <map>

#include "folia/error.hpp"

namespace folia {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<long>(r * cols_),
                        data_.begin() + static_cast<long>((r + 1) * cols_));
}

EchelonForm reduced_row_echelon(RationalMatrix m) {
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

RationalVector primitive_integer(RationalVector v) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& x : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num_gcd == 0) return v;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (*first < 0) scale = -scale;
  for (auto& x : v) x *= scale;
  return v;
}

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const EchelonForm e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(primitive_integer(std::move(v)));
  }
  return basis;
}

std::vector<RationalVector> row_space_basis(const RationalMatrix& m) {
  const EchelonForm e = reduced_row_echelon(m);
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) rows.push_back(primitive_integer(e.reduced.row(r)));
  return rows;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

std::vector<RatFunc> FieldMatrix::multiply(std::span<const RatFunc> v) const {
  if (v.size() != cols_) throw InputError("matrix/vector dimension mismatch");
  std::vector<RatFunc> out(rows_, RatFunc(nvars_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

namespace {

using PolyRow = std::vector<Polynomial>;

struct Elimination {
  std::vector<PolyRow> rows;            // echelon form, fraction free
  std::vector<std::size_t> pivot_cols;  // pivot column of rows[0..rank)
};

// Rows of [M | b] scaled by the lcm of their denominators.
std::vector<PolyRow> clear_denominators(const FieldMatrix& m, std::span<const RatFunc> b) {
  const bool augmented = !b.empty();
  std::vector<PolyRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial l(m.nvars(), 1);
    auto absorb = [&](const RatFunc& f) {
      if (!f.den().is_constant()) l = lcm(l, f.den());
    };
    for (std::size_t c = 0; c < m.cols(); ++c) absorb(m(r, c));
    if (augmented) absorb(b[r]);
    PolyRow row;
    row.reserve(m.cols() + (augmented ? 1 : 0));
    auto push = [&](const RatFunc& f) {
      if (f.is_zero()) {
        row.emplace_back(m.nvars());
      } else {
        row.push_back(divide_exact(l, f.den()) * f.num());
      }
    };
    for (std::size_t c = 0; c < m.cols(); ++c) push(m(r, c));
    if (augmented) push(b[r]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Elimination bareiss(std::vector<PolyRow> rows, std::size_t ncols, std::size_t nvars) {
  Elimination out;
  Polynomial prev(nvars, 1);
  std::size_t r = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      if (best == rows.size() || rows[i][c].num_terms() < rows[best][c].num_terms()) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const Polynomial& pivot = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Polynomial factor = rows[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        Polynomial v = pivot * rows[i][j] - factor * rows[r][j];
        rows[i][j] = prev.is_constant() ? v * Rational(1 / prev.constant_value()) : divide_exact(v, prev);
      }
      rows[i][c] = Polynomial(nvars);
      // Columns between the previous pivot and c are already zero below r.
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace

SolveResult solve_linear(const FieldMatrix& m, std::span<const RatFunc> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side has wrong length");
  const std::size_t n = m.cols();
  const std::size_t nv = m.nvars();
  SolveResult result;
  if (m.rows() == 0) {
    result.status = n == 0 ? SolveStatus::unique : SolveStatus::underdetermined;
    result.solution.assign(n, RatFunc(nv));
    for (std::size_t f = 0; f < n; ++f) {
      std::vector<RatFunc> v(n, RatFunc(nv));
      v[f] = RatFunc(nv, 1);
      result.kernel.push_back(std::move(v));
    }
    return result;
  }
  const Elimination e = bareiss(clear_denominators(m, b), n, nv);
  const std::size_t rank = e.pivot_cols.size();
  result.rank = rank;
  for (std::size_t i = rank; i < e.rows.size(); ++i) {
    if (!e.rows[i][n].is_zero()) {
      result.status = SolveStatus::inconsistent;
      return result;
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  // Back substitution with the given free-variable assignment.
  auto back_substitute = [&](std::vector<RatFunc> x, bool homogeneous) {
    for (std::size_t k = rank; k-- > 0;) {
      const std::size_t c = e.pivot_cols[k];
      const PolyRow& row = e.rows[k];
      RatFunc acc = homogeneous ? RatFunc(nv) : RatFunc(row[n]);
      for (std::size_t j = c + 1; j < n; ++j) {
        if (!row[j].is_zero() && !x[j].is_zero()) acc -= RatFunc(row[j]) * x[j];
      }
      x[c] = acc / RatFunc(row[c]);
    }
    return x;
  };

  result.solution = back_substitute(std::vector<RatFunc>(n, RatFunc(nv)), false);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFunc> x(n, RatFunc(nv));
    x[f] = RatFunc(nv, 1);
    result.kernel.push_back(back_substitute(std::move(x), true));
  }
  result.status = rank == n ? SolveStatus::unique : SolveStatus::underdetermined;
  return result;
}

std::size_t rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(clear_denominators(m, {}), m.cols(), m.nvars()).pivot_cols.size();
}

// ---------------------------------------------------------------------------

RationalMatrix coordinate_matrix(std::span<const RatFunc> values) {
  if (values.empty()) return RationalMatrix(0, 0);
  const std::size_t nv = values.front().nvars();
  Polynomial common(nv, 1);
  for (const auto& v : values) {
    if (v.nvars() != nv) throw InputError("values live on different charts");
    if (!v.den().is_constant()) common = lcm(common, v.den());
  }
  std::vector<Polynomial> numerators;
  numerators.reserve(values.size());
  std::map<Exponents, std::size_t, GrlexGreater> row_of;
  for (const auto& v : values) {
    Polynomial p = v.is_zero() ? Polynomial(nv) : divide_exact(common, v.den()) * v.num();
    for (const auto& [e, c] : p.terms()) row_of.try_emplace(e, 0);
    numerators.push_back(std::move(p));
  }
  std::size_t next = 0;
  for (auto& [e, idx] : row_of) idx = next++;
  RationalMatrix m(row_of.size(), values.size());
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    for (const auto& [e, c] : numerators[k].terms()) m(row_of.at(e), k) = c;
  }
  return m;
}

std::vector<RationalVector> constant_relations(std::span<const RatFunc> values) {
  if (values.empty()) return {};
  const RationalMatrix m = coordinate_matrix(values);
  if (m.rows() == 0) {
    // every value is zero
    std::vector<RationalVector> basis;
    for (std::size_t k = 0; k < values.size(); ++k) {
      RationalVector v(values.size(), 0);
      v[k] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel(m);
}

}  // namespace folia
