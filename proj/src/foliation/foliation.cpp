#include "folia/foliation/foliation.hpp"

namespace folia {

namespace {

IndexSet bit(std::size_t i) { return IndexSet{1} << i; }

void require_one_forms(std::span<const Form> forms) {
  for (const auto& f : forms) {
    require_same_chart(forms.front().chart(), f.chart());
    if (f.degree() != 1) throw InputError("expected one-forms");
  }
}

Form wedge_all(std::span<const Form> forms) {
  Form w = Form::scalar(forms.front().chart(), RatFunc(forms.front().nvars(), 1));
  for (const auto& f : forms) w = wedge(w, f);
  return w;
}

Form one_form(const Chart& chart, std::span<const RatFunc> coeffs) {
  Form out(chart, 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) out += Form::basis(chart, bit(j), coeffs[j]);
  }
  return out;
}

// Linear system for theta = sum c_j dx_j: for each form w and each a < b,
//   c_a w_b - c_b w_a = coefficient of dx_a /\ dx_b in dw.
struct ThetaSystem {
  FieldMatrix matrix;
  std::vector<RatFunc> rhs;
};

ThetaSystem theta_system(std::span<const Form> forms) {
  const std::size_t n = forms.front().nvars();
  std::vector<std::vector<RatFunc>> rows;
  std::vector<RatFunc> rhs;
  for (const auto& w : forms) {
    const Form dw = ext_d(w);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const RatFunc wa = w.component(a);
        const RatFunc wb = w.component(b);
        RatFunc target = dw.coefficient(bit(a) | bit(b));
        if (wa.is_zero() && wb.is_zero() && target.is_zero()) continue;
        std::vector<RatFunc> row(n, RatFunc(n));
        row[a] = wb;
        row[b] = -wa;
        rows.push_back(std::move(row));
        rhs.push_back(std::move(target));
      }
    }
  }
  FieldMatrix m(rows.size(), n, n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return {std::move(m), std::move(rhs)};
}

SolveResult solve_theta(std::span<const Form> forms) {
  const ThetaSystem sys = theta_system(forms);
  return solve_linear(sys.matrix, sys.rhs);
}

[[noreturn]] void report_inconsistency(std::span<const Form> forms) {
  const Chart& chart = forms.front().chart();
  Form previous(chart, 1);
  for (std::size_t k = 1; k <= forms.size(); ++k) {
    const SolveResult r = solve_theta(forms.first(k));
    const Form& w = forms[k - 1];
    if (r.status == SolveStatus::inconsistent) {
      throw NoCommonTheta(k, ext_d(w) - wedge(previous, w));
    }
    previous = one_form(chart, r.solution);
  }
  throw StructuralError("theta system inconsistent but every prefix solvable");
}

}  // namespace

FormSpace::FormSpace(std::vector<Form> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw InputError("a form space needs a nonempty basis");
  require_one_forms(basis_);
  if (!constant_relations(std::span<const Form>(basis_)).empty()) {
    throw InputError("basis forms are linearly dependent over Q");
  }
}

Form FormSpace::combination(std::span<const Rational> a) const {
  if (a.size() != basis_.size()) throw InputError("coefficient vector has wrong length");
  Form out(chart(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) out += basis_[i] * a[i];
  }
  return out;
}

bool is_integrable(const Form& omega) {
  if (omega.degree() != 1) throw InputError("integrability test expects a one-form");
  return wedge(omega, ext_d(omega)).is_zero();
}

bool is_integrable_decomposable(std::span<const Form> alphas) {
  if (alphas.empty()) throw InputError("no factors given");
  require_one_forms(alphas);
  const Form w = wedge_all(alphas);
  if (w.is_zero()) throw InputError("not a codimension-q distribution: the wedge of the factors vanishes");
  for (const auto& a : alphas) {
    if (!wedge(w, ext_d(a)).is_zero()) return false;
  }
  return true;
}

std::size_t rank_by_wedge(std::span<const Form> forms) {
  if (forms.empty()) return 0;
  require_one_forms(forms);
  // Nonvanishing wedges are the independent sets of a matroid, so the
  // greedy choice reaches the maximum.
  Form acc = Form::scalar(forms.front().chart(), RatFunc(forms.front().nvars(), 1));
  std::size_t r = 0;
  for (const auto& f : forms) {
    Form next = wedge(acc, f);
    if (next.is_zero()) continue;
    acc = std::move(next);
    ++r;
  }
  return r;
}

std::size_t rank_by_matrix(std::span<const Form> forms) {
  if (forms.empty()) return 0;
  require_one_forms(forms);
  const std::size_t n = forms.front().nvars();
  FieldMatrix m(forms.size(), n, n);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = forms[i].component(j);
  }
  return rank(m);
}

std::size_t rank(const FormSpace& space) {
  const std::size_t a = rank_by_wedge(space.basis());
  const std::size_t b = rank_by_matrix(space.basis());
  if (a != b) throw StructuralError("wedge rank and matrix rank disagree");
  return a;
}

ThetaCertificate common_theta(std::span<const Form> forms) {
  if (forms.size() < 2) throw InputError("common theta needs at least two forms");
  require_one_forms(forms);
  const SolveResult r = solve_theta(forms);
  if (r.status == SolveStatus::inconsistent) report_inconsistency(forms);
  if (r.status == SolveStatus::underdetermined) {
    throw PreconditionError("underdetermined: theta is not unique (input of rank < 2)");
  }
  ThetaCertificate cert{one_form(forms.front().chart(), r.solution), false, {}};
  cert.closed = ext_d(cert.theta).is_zero();
  for (const auto& w : forms) cert.residuals.push_back(ext_d(w) - wedge(cert.theta, w));
  return cert;
}

WebCurvature web_curvature(const Form& omega0, const Form& omega1) {
  require_same_chart(omega0.chart(), omega1.chart());
  const Form omega2 = -(omega0 + omega1);
  const Form web[] = {omega0, omega1, omega2};
  for (std::size_t i = 0; i < 3; ++i) {
    if (web[i].degree() != 1) throw InputError("web members must be one-forms");
    if (!is_integrable(web[i])) {
      throw PreconditionError("web member w" + std::to_string(i) + " is not integrable");
    }
  }
  if (wedge(omega0, omega1).is_zero()) throw PreconditionError("w0 /\\ w1 vanishes");
  ThetaCertificate cert = common_theta(web);
  return {cert.theta, ext_d(cert.theta)};
}

Form rescale_theta(const Form& theta, const RatFunc& f) {
  if (f.is_zero()) throw InputError("rescaling by zero");
  if (f.nvars() != theta.nvars()) throw InputError("function lives on a different chart");
  return ext_d(Form::scalar(theta.chart(), f)) * f.inverse() + theta;
}

FirstIntegralCheck is_first_integral(const RatFunc& f, const Form& omega) {
  if (f.nvars() != omega.nvars()) throw InputError("function lives on a different chart");
  const Form df = ext_d(Form::scalar(omega.chart(), f));
  return {wedge(df, omega).is_zero(), f.is_constant()};
}

bool AxisIdentityReport::hypotheses_hold() const {
  for (const auto& h : hypotheses) {
    if (!h.holds) return false;
  }
  return true;
}

bool AxisIdentityReport::identities_hold() const {
  for (const auto& p : pairs) {
    if (!p.holds()) return false;
  }
  return true;
}

AxisIdentityReport verify_axis_identity(std::span<const Form> forms, std::span<const RatFunc> funcs) {
  if (forms.empty()) throw InputError("no forms given");
  if (forms.size() != funcs.size()) throw InputError("need one function per form");
  require_one_forms(forms);
  const Chart& chart = forms.front().chart();
  for (const auto& f : funcs) {
    if (f.nvars() != chart.size()) throw InputError("function lives on a different chart");
    if (f.is_zero()) throw InputError("functions must be nonzero");
  }
  AxisIdentityReport report;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    report.hypotheses.push_back({"w" + std::to_string(i + 1) + " integrable", is_integrable(forms[i])});
  }
  const Form w = wedge_all(forms);
  report.hypotheses.push_back({"wedge nonzero", !w.is_zero()});
  Form sum(chart, 1);
  Form weighted(chart, 1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    sum += forms[i];
    weighted += forms[i] * funcs[i];
  }
  report.hypotheses.push_back({"sum integrable", is_integrable(sum)});
  report.hypotheses.push_back({"weighted sum integrable", is_integrable(weighted)});
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const Form dq = ext_d(Form::scalar(chart, funcs[i] / funcs[j]));
      report.pairs.push_back({i, j, wedge(dq, w)});
    }
  }
  return report;
}

}  // namespace folia
