#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folia/exterior/graded.hpp"

namespace folia {

// Finite sequence (w_0, ..., w_{N-1}) of one-forms on a base chart; the
// associated form on the chart extended by an auxiliary coordinate z is
//   W = dz + sum_n z^n w_n.
// W /\ dW = 0 expands, at z^0 and z^1 of the dz-part, to
//   d(w_0) = w_0 /\ w_1,   d(w_1) = 2 w_0 /\ w_2,
// so a length-2 sequence is (w, -theta) for a closed theta with
// dw = theta /\ w.
class GVSequence {
 public:
  // Throws InputError for an empty list, a zero w_0, mixed charts or
  // forms of degree other than 1.
  explicit GVSequence(std::vector<Form> omegas);

  const Chart& chart() const { return omegas_.front().chart(); }
  const std::vector<Form>& omegas() const { return omegas_; }
  // Least n with w_k = 0 for all k >= n.
  std::size_t length() const;

  // Base chart plus the auxiliary coordinate ("z", or a fresh name).
  Chart extended_chart() const;
  // dz + sum z^n w_n on extended_chart().
  Form total_form() const;
  // i_t^* W: z := t and dz := 0, a one-form on the base chart.
  Form pullback(const Rational& t) const;

 private:
  std::vector<Form> omegas_;
};

// Coefficient of z^power in W /\ dW, a three-form on the extended chart
// whose coefficients do not involve z.
struct GVCondition {
  unsigned power = 0;
  Form coefficient;
};

// Nonzero z-power parts of W /\ dW in increasing power; empty iff the
// sequence is a Godbillon-Vey sequence.
std::vector<GVCondition> gv_conditions(const GVSequence& seq);

// (w, -theta); a Godbillon-Vey sequence exactly when dw = theta /\ w and
// d(theta) = 0.
GVSequence sequence_from_theta(const Form& omega, const Form& theta);

// Closed theta of a verified sequence of length <= 2 (theta = -w_1).
// Throws PreconditionError when the sequence fails or is longer.
Form theta_from_sequence(const GVSequence& seq);

// Rational g with dg = omega, or nullopt when omega is not exact. Throws
// PreconditionError unless omega is a closed one-form.
std::optional<RatFunc> rational_primitive(const Form& omega);

enum class TransverseClass { exact, closed, affine, projective, longer, unverified };

std::string to_string(TransverseClass c);

struct TransverseReport {
  TransverseClass kind = TransverseClass::unverified;
  bool candidate_verified = false;
  std::size_t length = 0;                   // of the candidate
  std::vector<GVCondition> conditions;      // residual when unverified
  std::optional<Form> closed_witness;       // closed form defining the foliation
  std::optional<RatFunc> primitive;         // g with dg = closed_witness
};

// Grades the foliation of omega with the help of a candidate sequence.
// A closed defining form (omega itself, or w_0 of a verified length-1
// candidate) gives exact or closed; otherwise a verified candidate gives
// affine (length <= 2), projective (<= 3) or longer, and a failing one
// gives unverified. Throws InputError unless w_0 is a nonzero multiple of
// omega over the function field.
TransverseReport classify_transverse(const Form& omega, const GVSequence& candidate);

}  // namespace folia
