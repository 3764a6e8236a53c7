#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "folia/field/ratfunc.hpp"

namespace folia {

// ---------------------------------------------------------------------------
// Linear algebra over Q.

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

EchelonForm reduced_row_echelon(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
// Basis of {v : M v = 0}, one vector per free column, scaled to primitive
// integers with the first nonzero entry positive.
std::vector<RationalVector> kernel(const RationalMatrix& m);
// Nonzero rows of the reduced echelon form, scaled as in kernel().
std::vector<RationalVector> row_space_basis(const RationalMatrix& m);
Rational determinant(RationalMatrix m);

// Scales a vector to coprime integers with the first nonzero entry positive.
RationalVector primitive_integer(RationalVector v);

// ---------------------------------------------------------------------------
// Linear algebra over the rational function field Q(x1..xn).

class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, RatFunc(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<RatFunc> multiply(std::span<const RatFunc> v) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<RatFunc> data_;
};

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::size_t rank = 0;
  std::vector<RatFunc> solution;              // particular solution (free variables 0)
  std::vector<std::vector<RatFunc>> kernel;   // basis of the null space
};

// Fraction-free (Bareiss) elimination of [M | b]. Rows are cleared of
// denominators first; the pivot in each column is the entry with the
// fewest terms, ties going to the earlier row.
SolveResult solve_linear(const FieldMatrix& m, std::span<const RatFunc> b);
std::size_t rank(const FieldMatrix& m);

// ---------------------------------------------------------------------------
// Q-linear structure of finitely many rational functions.

// Coordinates over Q: all values are put over a common denominator and
// each numerator monomial becomes a row. Column k holds values[k].
RationalMatrix coordinate_matrix(std::span<const RatFunc> values);

// Basis of {c in Q^m : sum c_k values[k] = 0}.
std::vector<RationalVector> constant_relations(std::span<const RatFunc> values);

}  // namespace folia
