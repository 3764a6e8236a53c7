#pragma once

#include <span>
#include <string>
#include <vector>

#include "folia/error.hpp"
#include "folia/exterior/graded.hpp"

namespace folia {

// Ordered basis of a finite-dimensional Q-space of one-forms on one chart.
class FormSpace {
 public:
  // Throws InputError for an empty basis, mixed charts, forms of degree
  // other than 1, or a basis with a Q-linear relation.
  explicit FormSpace(std::vector<Form> basis);

  const Chart& chart() const { return basis_.front().chart(); }
  const std::vector<Form>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  const Form& operator[](std::size_t i) const { return basis_[i]; }

  // sum a_i w_i. Throws InputError on a length mismatch.
  Form combination(std::span<const Rational> a) const;

 private:
  std::vector<Form> basis_;
};

// w /\ dw == 0 for a one-form w.
bool is_integrable(const Form& omega);

// w /\ d(alpha_i) == 0 for all i, where w = alpha_1 /\ ... /\ alpha_q.
// Throws InputError when w vanishes.
bool is_integrable_decomposable(std::span<const Form> alphas);

// Largest r such that some r forms have a nonzero wedge.
std::size_t rank_by_wedge(std::span<const Form> forms);
// Rank of the coefficient matrix over the rational function field.
std::size_t rank_by_matrix(std::span<const Form> forms);
// Both of the above; throws StructuralError if they disagree.
std::size_t rank(const FormSpace& space);

struct ThetaCertificate {
  Form theta;
  bool closed = false;
  std::vector<Form> residuals;  // dw_i - theta /\ w_i
};

// Raised by common_theta when dw_i = theta /\ w_i has no solution.
// `prefix` is the length of the shortest inconsistent prefix of the input;
// `residual` is dw - theta' /\ w for its last form w, with theta' the
// solution of the previous prefix (zero for a single form).
class NoCommonTheta : public StructuralError {
 public:
  NoCommonTheta(std::size_t prefix, Form residual)
      : StructuralError("no common theta"), prefix_(prefix), residual_(std::move(residual)) {}
  std::size_t prefix() const { return prefix_; }
  const Form& residual() const { return residual_; }

 private:
  std::size_t prefix_;
  Form residual_;
};

// The one-form theta with dw_i = theta /\ w_i for every input form.
// Throws InputError for fewer than two forms or mixed charts,
// NoCommonTheta when no such theta exists, and PreconditionError
// ("underdetermined") when it is not unique, e.g. for rank-1 input.
ThetaCertificate common_theta(std::span<const Form> forms);

struct WebCurvature {
  Form theta;      // common theta of w0, w1, w2 = -w0 - w1
  Form curvature;  // d(theta)
};

// Throws PreconditionError unless w0, w1, w2 are integrable and
// w0 /\ w1 != 0; NoCommonTheta if the system is inconsistent.
WebCurvature web_curvature(const Form& omega0, const Form& omega1);

// df/f + theta. Throws InputError for f = 0.
Form rescale_theta(const Form& theta, const RatFunc& f);

struct FirstIntegralCheck {
  bool holds = false;     // df /\ omega == 0
  bool constant = false;  // f is constant, so the check is vacuous
};

FirstIntegralCheck is_first_integral(const RatFunc& f, const Form& omega);

struct HypothesisCheck {
  std::string name;
  bool holds = false;
};

struct PairIdentity {
  std::size_t i = 0;
  std::size_t j = 0;
  Form value;  // d(f_i/f_j) /\ w_1 /\ ... /\ w_q
  bool holds() const { return value.is_zero(); }
};

struct AxisIdentityReport {
  std::vector<HypothesisCheck> hypotheses;
  std::vector<PairIdentity> pairs;
  bool hypotheses_hold() const;
  bool identities_hold() const;
};

// Checks the hypotheses (each w_i integrable, w_1 /\ ... /\ w_q != 0,
// sum w_i integrable, sum f_i w_i integrable) and evaluates every pair
// identity i < j. Throws InputError on a length mismatch or a zero f_j.
AxisIdentityReport verify_axis_identity(std::span<const Form> forms, std::span<const RatFunc> funcs);

}  // namespace folia
