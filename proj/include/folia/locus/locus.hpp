#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folia/foliation/foliation.hpp"

namespace folia {

// Quadratic forms in the coordinates (a_0, ..., a_q) of a form space,
// as symmetric matrices: Q(a) = a^T M a.
struct QuadricSystem {
  std::size_t dimension = 0;
  std::vector<RationalMatrix> quadrics;

  // Q_k as a polynomial in `dimension` variables.
  Polynomial polynomial(std::size_t k) const;
  Rational evaluate(std::size_t k, std::span<const Rational> a) const;
  bool vanishes_at(std::span<const Rational> a) const;
};

// Basis of the quadrics cutting out the integrable cone of the space:
// w /\ dw = sum_{i<=j} a_i a_j T_ij with T_ii = w_i /\ dw_i and
// T_ij = w_i /\ dw_j + w_j /\ dw_i; each Q-coordinate of the three-forms
// gives one quadric, and the reduced row space of these is returned with
// primitive integer rows.
QuadricSystem cone_quadrics(const FormSpace& space);

// sum a_i w_i is integrable. Throws InputError for the zero vector.
bool membership(const FormSpace& space, std::span<const Rational> a);

// ---------------------------------------------------------------------------
// Classification of P(Int_W) for three-dimensional W.

enum class LocusKind {
  whole_plane,
  finite_points,
  line,
  smooth_conic,
  two_lines,
  double_line,
  line_plus_points,
  curve_forces_plane,
};

std::string to_string(LocusKind k);

// Line n . a = 0 with n = base + sqrt(radicand) * offset. A radicand of 0
// is a single rational line; a nonsquare radicand stands for the pair of
// conjugate lines n = base +- sqrt(radicand) * offset.
struct LineComponent {
  RationalVector base;
  RationalVector offset;
  Rational radicand = 0;
  unsigned multiplicity = 1;
  std::vector<RationalVector> samples;
  bool minimal_degree = false;

  bool conjugate_pair() const { return radicand != 0; }
};

struct ConicComponent {
  RationalMatrix matrix;
  std::vector<RationalVector> samples;  // empty if no rational point was found
  bool minimal_degree = false;
};

// Conjugate points whose coordinates are polynomials in a root r of the
// monic irreducible `minimal_polynomial` (coefficients from the constant
// term up). Degree 1 is a rational point.
struct PointComponent {
  std::vector<Rational> minimal_polynomial;
  std::vector<std::vector<Rational>> coordinates;
  bool minimal_degree = false;

  std::size_t count() const { return minimal_polynomial.size() - 1; }
  // Primitive integer coordinates of a rational point.
  std::optional<RationalVector> rational() const;
};

struct LocusReport {
  LocusKind kind = LocusKind::whole_plane;
  QuadricSystem system;
  std::vector<LineComponent> lines;
  std::optional<ConicComponent> conic;
  std::vector<PointComponent> points;
  std::vector<RationalVector> plane_samples;  // whole-plane membership samples
  bool verified = false;
  std::vector<std::string> notes;

  std::size_t point_count() const;
};

// Throws InputError unless the space has dimension 3.
LocusReport classify_plane_locus(const FormSpace& space);

// ---------------------------------------------------------------------------
// Veronese families w(t) = sum t^i w_i.

// Coefficients I_m = sum_{i+j=m} w_i /\ dw_j of w(t) /\ dw(t), trailing
// zeros dropped (empty when the product vanishes identically). Throws
// InputError for fewer than two forms.
std::vector<Form> veronese_poly(std::span<const Form> family);

enum class VeroneseVerdict { integrable_everywhere, not_integrable, insufficient_samples };

std::string to_string(VeroneseVerdict v);

struct VeroneseReport {
  VeroneseVerdict verdict = VeroneseVerdict::insufficient_samples;
  int degree = -1;                  // deg_t I(t), -1 for I = 0
  std::size_t family_degree = 0;    // k
  std::size_t sample_count = 0;
  std::optional<Rational> witness;  // sample with I(t) != 0
  std::size_t sufficient_count = 0;         // k + 3 integrable members suffice ...
  bool sufficient_count_applies = false;     // ... on a chart of dimension k + 1
};

// Throws InputError for repeated samples.
VeroneseReport veronese_check(std::span<const Form> family, std::span<const Rational> samples);

// ---------------------------------------------------------------------------

// deg = span dimension - dimension + 1. Throws InputError for negative
// values or dimension > span dimension.
bool minimal_degree_check(long degree, long span_dimension, long dimension);

// No three of the points are collinear. Throws InputError for fewer than
// four points, points without three coordinates, or zero vectors.
bool general_position4(std::span<const RationalVector> points);

}  // namespace folia
