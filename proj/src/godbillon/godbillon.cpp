#include "folia/godbillon/godbillon.hpp"

#include <map>

#include "folia/error.hpp"
#include "folia/field/univariate.hpp"

namespace folia {

GVSequence::GVSequence(std::vector<Form> omegas) : omegas_(std::move(omegas)) {
  if (omegas_.empty()) throw InputError("empty Godbillon-Vey sequence");
  for (const auto& w : omegas_) {
    require_same_chart(omegas_.front().chart(), w.chart());
    if (w.degree() != 1) throw InputError("sequence entries must be one-forms");
  }
  if (omegas_.front().is_zero()) throw InputError("first entry of the sequence is zero");
}

std::size_t GVSequence::length() const {
  std::size_t n = omegas_.size();
  while (n > 0 && omegas_[n - 1].is_zero()) --n;
  return n;
}

Chart GVSequence::extended_chart() const { return chart().extended("z"); }

Form GVSequence::total_form() const {
  const Chart big = extended_chart();
  const std::size_t zi = big.size() - 1;
  const RatFunc z = RatFunc::variable(big.size(), zi);
  Form out = Form::coordinate(big, zi);
  RatFunc power(big.size(), 1);
  for (const auto& w : omegas_) {
    if (!w.is_zero()) out += w.lifted(big) * power;
    power *= z;
  }
  return out;
}

Form GVSequence::pullback(const Rational& t) const { return total_form().restricted(chart(), t); }

std::vector<GVCondition> gv_conditions(const GVSequence& seq) {
  const Form big = seq.total_form();
  const Form product = wedge(big, ext_d(big));
  const Chart& chart = product.chart();
  const std::size_t zi = chart.size() - 1;
  // Coefficients are polynomial in z over Q(x): the z-free denominator
  // is kept and the numerator is split by powers of z.
  std::map<unsigned, Form> parts;
  for (const auto& [s, c] : product.terms()) {
    const std::vector<Polynomial> slices = c.num().coefficients_in(zi);
    for (std::size_t k = 0; k < slices.size(); ++k) {
      if (slices[k].is_zero()) continue;
      auto it = parts.try_emplace(static_cast<unsigned>(k), chart, 3).first;
      it->second += Form::basis(chart, s, RatFunc(slices[k], c.den()));
    }
  }
  std::vector<GVCondition> out;
  for (auto& [k, f] : parts) {
    if (!f.is_zero()) out.push_back({k, std::move(f)});
  }
  return out;
}

GVSequence sequence_from_theta(const Form& omega, const Form& theta) {
  require_same_chart(omega.chart(), theta.chart());
  return GVSequence({omega, -theta});
}

Form theta_from_sequence(const GVSequence& seq) {
  if (seq.length() > 2) throw PreconditionError("sequence is longer than 2");
  if (!gv_conditions(seq).empty()) throw PreconditionError("not a Godbillon-Vey sequence");
  if (seq.length() < 2) return Form(seq.chart(), 1);
  return -seq.omegas()[1];
}

std::optional<RatFunc> rational_primitive(const Form& omega) {
  if (omega.degree() != 1) throw PreconditionError("primitive of a form that is not a one-form");
  if (!ext_d(omega).is_zero()) throw PreconditionError("primitive of a form that is not closed");
  const std::size_t n = omega.nvars();
  // Integrate in x_1, then the remainder (free of x_1) in x_2, and so on.
  RatFunc g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatFunc rest = omega.component(i) - g.partial(i);
    if (rest.is_zero()) continue;
    const std::optional<RatFunc> part = rational_antiderivative(rest, i);
    if (!part) return std::nullopt;
    g += *part;
  }
  if (!(ext_d(Form::scalar(omega.chart(), g)) == omega)) {
    throw StructuralError("iterated antiderivative does not reproduce the form");
  }
  return g;
}

std::string to_string(TransverseClass c) {
  switch (c) {
    case TransverseClass::exact: return "exact";
    case TransverseClass::closed: return "closed";
    case TransverseClass::affine: return "affine";
    case TransverseClass::projective: return "projective";
    case TransverseClass::longer: return "longer";
    case TransverseClass::unverified: return "unverified";
  }
  return "unverified";
}

TransverseReport classify_transverse(const Form& omega, const GVSequence& candidate) {
  require_same_chart(omega.chart(), candidate.chart());
  if (omega.degree() != 1) throw InputError("expected a one-form");
  const Form& w0 = candidate.omegas().front();
  if (omega.is_zero() || !wedge(omega, w0).is_zero()) {
    throw InputError("candidate does not define the same distribution");
  }
  TransverseReport r;
  r.length = candidate.length();
  r.conditions = gv_conditions(candidate);
  r.candidate_verified = r.conditions.empty();
  if (ext_d(omega).is_zero()) {
    r.closed_witness = omega;
  } else if (r.candidate_verified && r.length == 1) {
    r.closed_witness = w0;
  }
  if (r.closed_witness) {
    r.primitive = rational_primitive(*r.closed_witness);
    r.kind = r.primitive ? TransverseClass::exact : TransverseClass::closed;
  } else if (!r.candidate_verified) {
    r.kind = TransverseClass::unverified;
  } else if (r.length <= 2) {
    r.kind = TransverseClass::affine;
  } else if (r.length <= 3) {
    r.kind = TransverseClass::projective;
  } else {
    r.kind = TransverseClass::longer;
  }
  return r;
}

}  // namespace folia
