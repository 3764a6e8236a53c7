#include "folia/cli/commands.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "folia/foliation/foliation.hpp"
#include "folia/godbillon/godbillon.hpp"
#include "folia/locus/locus.hpp"
#include "folia/poisson/poisson.hpp"

namespace folia::cli {

using json = nlohmann::ordered_json;

namespace {

std::string str(const Rational& r) { return to_string(r); }

json vec(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

std::string fn(const RatFunc& f, const Chart& c) { return f.to_string(c.names()); }

std::vector<std::string> coefficient_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

// Univariate polynomial in the root r, coefficients from the constant term up.
std::string in_root(const std::vector<Rational>& coeffs) {
  Polynomial p(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    p += Polynomial::monomial({static_cast<unsigned>(k)}, coeffs[k]);
  }
  const std::vector<std::string> r = {"r"};
  return p.to_string(r);
}

json matrix(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec(m.row(i)));
  return out;
}

std::vector<Form> selected_forms(const Document& doc, const Options& opts) {
  if (!opts.space.empty()) {
    if (!opts.forms.empty()) throw InputError("give either --space or --form, not both");
    return doc.space(opts.space);
  }
  if (opts.forms.empty()) throw InputError("no forms selected; use --space or --form");
  std::vector<Form> out;
  for (const auto& f : opts.forms) out.push_back(doc.form(f));
  return out;
}

const std::string& single(const std::vector<std::string>& v, const char* what) {
  if (v.size() != 1) throw InputError(std::string("expected exactly one ") + what);
  return v.front();
}

Rational random_rational(std::mt19937_64& rng) {
  Rational r(std::uniform_int_distribution<long>(-9, 9)(rng), std::uniform_int_distribution<long>(1, 9)(rng));
  r.canonicalize();
  return r;
}

RationalVector random_nonzero_vector(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    RationalVector v;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? Rational(0) : random_rational(rng));
      nonzero = nonzero || v.back() != 0;
    }
    if (nonzero) return v;
  }
}

json forms_json(const std::vector<Form>& forms) {
  json out = json::array();
  for (const auto& w : forms) out.push_back(w.to_string());
  return out;
}

// --------------------------------------------------------------------------

json check_integrable(const Document& doc, const Options& opts) {
  std::vector<std::pair<std::string, Form>> targets;
  if (opts.all) {
    for (const auto& name : doc.definition_names()) {
      const Expression e = doc.resolve(name);
      if (const auto* w = std::get_if<Form>(&e); w != nullptr && w->degree() == 1) targets.emplace_back(name, *w);
    }
    if (targets.empty()) throw InputError("the document defines no one-forms");
  } else {
    if (opts.forms.empty()) throw InputError("no form selected; use --form or --all");
    for (const auto& f : opts.forms) targets.emplace_back(f, doc.form(f));
  }
  json results = json::array();
  bool all = true;
  for (const auto& [name, w] : targets) {
    const Form product = wedge(w, ext_d(w));
    const bool ok = product.is_zero();
    all = all && ok;
    json r;
    r["form"] = name;
    r["expression"] = w.to_string();
    r["integrable"] = ok;
    r["w_dw"] = product.to_string();
    results.push_back(r);
  }
  json report;
  report["results"] = results;
  report["holds"] = all;
  return report;
}

json check_decomposable(const Document& doc, const Options& opts) {
  const std::vector<Form> alphas = selected_forms(doc, opts);
  Form product = alphas.front();
  for (std::size_t i = 1; i < alphas.size(); ++i) product = wedge(product, alphas[i]);
  const bool ok = is_integrable_decomposable(alphas);
  json report;
  report["forms"] = forms_json(alphas);
  report["wedge"] = product.to_string();
  report["codimension"] = alphas.size();
  report["integrable"] = ok;
  report["holds"] = ok;
  return report;
}

json rank_command(const Document& doc, const Options& opts) {
  const std::vector<Form> forms = selected_forms(doc, opts);
  const std::size_t by_wedge = rank_by_wedge(forms);
  const std::size_t by_matrix = rank_by_matrix(forms);
  if (by_wedge != by_matrix) throw StructuralError("rank computations disagree");
  json report;
  report["forms"] = forms_json(forms);
  report["rank"] = by_wedge;
  report["rank_by_wedge"] = by_wedge;
  report["rank_by_matrix"] = by_matrix;
  report["holds"] = true;
  return report;
}

json quadrics_json(const QuadricSystem& sys) {
  json out = json::array();
  const auto names = coefficient_names(sys.dimension);
  for (std::size_t k = 0; k < sys.quadrics.size(); ++k) {
    json q;
    q["polynomial"] = sys.polynomial(k).to_string(names);
    q["matrix"] = matrix(sys.quadrics[k]);
    out.push_back(q);
  }
  return out;
}

json cone(const Document& doc, const Options& opts) {
  const FormSpace space(selected_forms(doc, opts));
  const QuadricSystem sys = cone_quadrics(space);
  std::mt19937_64 rng(opts.seed);
  std::size_t agree = 0;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const RationalVector a = random_nonzero_vector(rng, space.dimension());
    if (membership(space, a) == sys.vanishes_at(a)) ++agree;
  }
  json report;
  report["dimension"] = space.dimension();
  report["quadric_count"] = sys.quadrics.size();
  report["whole_cone"] = sys.quadrics.empty();
  report["quadrics"] = quadrics_json(sys);
  report["cross_check_samples"] = opts.trials;
  report["cross_check_agreements"] = agree;
  report["holds"] = agree == opts.trials;
  return report;
}

json membership_command(const Document& doc, const Options& opts) {
  if (opts.vector.empty()) throw InputError("no coefficient vector; use --vector");
  const FormSpace space(selected_forms(doc, opts));
  const RationalVector a = doc.vector(opts.vector);
  if (a.size() != space.dimension()) throw InputError("vector length does not match the space dimension");
  const bool ok = membership(space, a);
  const QuadricSystem sys = cone_quadrics(space);
  json values = json::array();
  for (std::size_t k = 0; k < sys.quadrics.size(); ++k) values.push_back(str(sys.evaluate(k, a)));
  json report;
  report["vector"] = vec(a);
  report["combination"] = space.combination(a).to_string();
  report["integrable"] = ok;
  report["quadric_values"] = values;
  report["quadrics_agree"] = ok == sys.vanishes_at(a);
  report["holds"] = ok;
  return report;
}

json locus_json(const LocusReport& r) {
  json out;
  out["kind"] = to_string(r.kind);
  out["verified"] = r.verified;
  out["quadrics"] = quadrics_json(r.system);
  json lines = json::array();
  for (const auto& line : r.lines) {
    json l;
    if (line.conjugate_pair()) {
      l["conjugate_pair"] = true;
      l["base"] = vec(line.base);
      l["offset"] = vec(line.offset);
      l["radicand"] = str(line.radicand);
      l["equation"] = "(base . a)^2 - radicand (offset . a)^2 = 0";
    } else {
      l["normal"] = vec(line.base);
    }
    l["multiplicity"] = line.multiplicity;
    json samples = json::array();
    for (const auto& s : line.samples) samples.push_back(vec(s));
    l["samples"] = samples;
    l["minimal_degree"] = line.minimal_degree;
    lines.push_back(l);
  }
  out["lines"] = lines;
  if (r.conic) {
    json c;
    c["matrix"] = matrix(r.conic->matrix);
    c["equation"] = r.system.polynomial(0).to_string(coefficient_names(3));
    json samples = json::array();
    for (const auto& s : r.conic->samples) samples.push_back(vec(s));
    c["samples"] = samples;
    c["minimal_degree"] = r.conic->minimal_degree;
    out["conic"] = c;
  }
  json points = json::array();
  for (const auto& p : r.points) {
    json q;
    q["count"] = p.count();
    if (auto v = p.rational()) {
      q["coordinates"] = vec(*v);
    } else {
      q["minimal_polynomial"] = in_root(p.minimal_polynomial);
      json coords = json::array();
      for (const auto& c : p.coordinates) coords.push_back(in_root(c));
      q["coordinates"] = coords;
    }
    q["minimal_degree"] = p.minimal_degree;
    points.push_back(q);
  }
  out["points"] = points;
  out["point_count"] = r.point_count();
  if (!r.plane_samples.empty()) {
    json samples = json::array();
    for (const auto& s : r.plane_samples) samples.push_back(vec(s));
    out["plane_samples"] = samples;
  }
  out["notes"] = r.notes;
  return out;
}

json classify_locus(const Document& doc, const Options& opts) {
  if (opts.all) {
    json results = json::array();
    bool all = true;
    for (const auto& name : doc.space_names()) {
      const std::vector<Form> forms = doc.space(name);
      if (forms.size() != 3) continue;
      json r = json{{"space", name}};
      r.update(locus_json(classify_plane_locus(FormSpace(forms))));
      all = all && r["verified"].get<bool>();
      results.push_back(r);
    }
    if (results.empty()) throw InputError("the document has no three-dimensional spaces");
    json report;
    report["results"] = results;
    report["holds"] = all;
    return report;
  }
  json report = locus_json(classify_plane_locus(FormSpace(selected_forms(doc, opts))));
  report["holds"] = report["verified"];
  return report;
}

json theta_json(const std::vector<Form>& forms) {
  json report;
  report["forms"] = forms_json(forms);
  try {
    const ThetaCertificate cert = common_theta(forms);
    report["theta"] = cert.theta.to_string();
    report["closed"] = cert.closed;
    report["d_theta"] = ext_d(cert.theta).to_string();
    json residuals = json::array();
    bool zero = true;
    for (const auto& r : cert.residuals) {
      residuals.push_back(r.to_string());
      zero = zero && r.is_zero();
    }
    report["residuals"] = residuals;
    report["holds"] = zero;
  } catch (const NoCommonTheta& e) {
    report["error"] = "no common theta";
    report["inconsistent_prefix"] = e.prefix();
    report["residual"] = e.residual().to_string();
    report["holds"] = false;
  }
  return report;
}

json common_theta_command(const Document& doc, const Options& opts) {
  if (opts.all) {
    json results = json::array();
    bool all = true;
    for (const auto& name : doc.space_names()) {
      json r = json{{"space", name}};
      try {
        r.update(theta_json(doc.space(name)));
      } catch (const PreconditionError& e) {
        r["error"] = e.what();
        r["holds"] = false;
      }
      all = all && r["holds"].get<bool>();
      results.push_back(r);
    }
    if (results.empty()) throw InputError("the document has no spaces");
    json report;
    report["results"] = results;
    report["holds"] = all;
    return report;
  }
  return theta_json(selected_forms(doc, opts));
}

json pencil_theta(const Document& doc, const Options& opts) {
  const std::vector<Form> forms = selected_forms(doc, opts);
  if (forms.size() != 2) throw InputError("pencil-theta needs exactly two forms");
  return theta_json(forms);
}

json web_curvature_command(const Document& doc, const Options& opts) {
  const std::vector<Form> forms = selected_forms(doc, opts);
  if (forms.size() == 3 && !(forms[0] + forms[1] + forms[2]).is_zero()) {
    throw InputError("the three web forms must sum to zero");
  }
  if (forms.size() != 2 && forms.size() != 3) throw InputError("a web needs two forms (or three summing to zero)");
  const WebCurvature wc = web_curvature(forms[0], forms[1]);
  json report;
  report["forms"] = forms_json({forms[0], forms[1], -forms[0] - forms[1]});
  report["theta"] = wc.theta.to_string();
  report["curvature"] = wc.curvature.to_string();
  report["flat"] = wc.curvature.is_zero();
  report["holds"] = true;
  return report;
}

json rescale_theta_command(const Document& doc, const Options& opts) {
  if (opts.theta.empty()) throw InputError("no theta; use --theta");
  const Form theta = doc.form(opts.theta);
  const RatFunc f = doc.function(single(opts.functions, "--function"));
  const Form rescaled = rescale_theta(theta, f);
  json report;
  report["theta"] = theta.to_string();
  report["function"] = fn(f, doc.chart());
  report["rescaled_theta"] = rescaled.to_string();
  bool ok = true;
  if (!opts.forms.empty()) {
    const Form w = doc.form(single(opts.forms, "--form"));
    if (ext_d(w) != wedge(theta, w)) throw PreconditionError("d(w) != theta /\\ w for the given form");
    const Form fw = f * w;
    ok = ext_d(fw) == wedge(rescaled, fw);
    report["form"] = w.to_string();
    report["identity_holds"] = ok;
  }
  report["holds"] = ok;
  return report;
}

json first_integral(const Document& doc, const Options& opts) {
  const RatFunc f = doc.function(single(opts.functions, "--function"));
  const Form w = doc.form(single(opts.forms, "--form"), static_cast<int>(opts.degree.value_or(1)));
  const FirstIntegralCheck c = is_first_integral(f, w);
  json report;
  report["function"] = fn(f, doc.chart());
  report["form"] = w.to_string();
  report["df_wedge_form"] = wedge(ext_d(Form::scalar(doc.chart(), f)), w).to_string();
  report["first_integral"] = c.holds;
  report["constant_function"] = c.constant;
  report["holds"] = c.holds;
  return report;
}

json axis_identity(const Document& doc, const Options& opts) {
  const std::vector<Form> forms = selected_forms(doc, opts);
  std::vector<RatFunc> funcs;
  for (const auto& f : opts.functions) funcs.push_back(doc.function(f));
  const AxisIdentityReport r = verify_axis_identity(forms, funcs);
  json hyp = json::array();
  json failed = json::array();
  for (const auto& h : r.hypotheses) {
    hyp.push_back(json{{"name", h.name}, {"holds", h.holds}});
    if (!h.holds) failed.push_back(h.name);
  }
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(json{{"i", p.i + 1}, {"j", p.j + 1}, {"value", p.value.to_string()}, {"holds", p.holds()}});
  }
  json report;
  report["hypotheses"] = hyp;
  report["failed_hypotheses"] = failed;
  report["pairs"] = pairs;
  report["hypotheses_hold"] = r.hypotheses_hold();
  report["identities_hold"] = r.identities_hold();
  report["holds"] = r.hypotheses_hold() && r.identities_hold();
  return report;
}

std::vector<Form> selected_sequence(const Document& doc, const Options& opts) {
  if (!opts.sequence.empty()) return doc.sequence(opts.sequence);
  throw InputError("no sequence selected; use --sequence");
}

json conditions_json(const std::vector<GVCondition>& conds) {
  json out = json::array();
  for (const auto& c : conds) out.push_back(json{{"power", c.power}, {"coefficient", c.coefficient.to_string()}});
  return out;
}

json gv_verify(const Document& doc, const Options& opts) {
  std::vector<std::pair<std::string, std::vector<Form>>> targets;
  if (opts.all) {
    for (const auto& name : doc.sequence_names()) targets.emplace_back(name, doc.sequence(name));
    if (targets.empty()) throw InputError("the document has no sequences");
  } else {
    targets.emplace_back(opts.sequence, selected_sequence(doc, opts));
  }
  json results = json::array();
  bool all = true;
  for (const auto& [name, forms] : targets) {
    const GVSequence seq(forms);
    const auto conds = gv_conditions(seq);
    json r;
    r["sequence"] = name;
    r["forms"] = forms_json(forms);
    r["length"] = seq.length();
    r["auxiliary_variable"] = seq.extended_chart().name(seq.extended_chart().size() - 1);
    r["total_form"] = seq.total_form().to_string();
    r["conditions"] = conditions_json(conds);
    r["verified"] = conds.empty();
    if (conds.empty() && seq.length() <= 2) r["theta"] = theta_from_sequence(seq).to_string();
    all = all && conds.empty();
    results.push_back(r);
  }
  json report;
  if (results.size() == 1 && !opts.all) {
    report = results.front();
  } else {
    report["results"] = results;
  }
  report["holds"] = all;
  return report;
}

json classify_transverse_command(const Document& doc, const Options& opts) {
  const Form w = doc.form(single(opts.forms, "--form"));
  const GVSequence seq(selected_sequence(doc, opts));
  const TransverseReport r = classify_transverse(w, seq);
  json report;
  report["form"] = w.to_string();
  report["class"] = to_string(r.kind);
  report["candidate_verified"] = r.candidate_verified;
  report["candidate_length"] = r.length;
  report["conditions"] = conditions_json(r.conditions);
  if (r.closed_witness) report["closed_witness"] = r.closed_witness->to_string();
  if (r.primitive) report["primitive"] = fn(*r.primitive, doc.chart());
  report["holds"] = r.kind != TransverseClass::unverified;
  return report;
}

std::vector<Form> selected_family(const Document& doc, const Options& opts) {
  if (!opts.family.empty()) return doc.family(opts.family);
  if (!opts.forms.empty()) {
    std::vector<Form> out;
    for (const auto& f : opts.forms) out.push_back(doc.form(f));
    return out;
  }
  throw InputError("no family selected; use --family or --form");
}

json veronese_poly_command(const Document& doc, const Options& opts) {
  const std::vector<Form> family = selected_family(doc, opts);
  const std::vector<Form> poly = veronese_poly(family);
  json coeffs = json::array();
  for (std::size_t m = 0; m < poly.size(); ++m) {
    if (!poly[m].is_zero()) coeffs.push_back(json{{"power", m}, {"coefficient", poly[m].to_string()}});
  }
  const long degree = static_cast<long>(poly.size()) - 1;
  const long bound = 2 * static_cast<long>(family.size() - 1);
  json report;
  report["family_degree"] = family.size() - 1;
  report["degree"] = degree;
  report["identically_zero"] = poly.empty();
  report["coefficients"] = coeffs;
  report["degree_bound"] = bound;
  report["holds"] = degree <= bound;
  return report;
}

json veronese_check_command(const Document& doc, const Options& opts) {
  const std::vector<Form> family = selected_family(doc, opts);
  RationalVector samples;
  if (!opts.samples.empty()) {
    samples = doc.vector(opts.samples);
  } else {
    // 2k + 1 distinct random parameters
    std::mt19937_64 rng(opts.seed);
    const std::size_t want = 2 * (family.size() - 1) + 1;
    while (samples.size() < want) {
      const Rational t = random_rational(rng);
      if (std::find(samples.begin(), samples.end(), t) == samples.end()) samples.push_back(t);
    }
  }
  const VeroneseReport r = veronese_check(family, samples);
  json report;
  report["samples"] = vec(samples);
  report["verdict"] = to_string(r.verdict);
  report["degree"] = r.degree;
  report["family_degree"] = r.family_degree;
  if (r.witness) report["witness"] = str(*r.witness);
  report["sufficient_count"] = r.sufficient_count;
  report["sufficient_count_applies"] = r.sufficient_count_applies;
  report["holds"] = r.verdict == VeroneseVerdict::integrable_everywhere;
  return report;
}

json minimal_degree(const Document&, const Options& opts) {
  if (!opts.degree || !opts.span || !opts.dimension) throw InputError("minimal-degree needs --degree, --span and --dim");
  const bool ok = minimal_degree_check(*opts.degree, *opts.span, *opts.dimension);
  json report;
  report["degree"] = *opts.degree;
  report["span_dimension"] = *opts.span;
  report["dimension"] = *opts.dimension;
  report["expected_degree"] = *opts.span - *opts.dimension + 1;
  report["minimal_degree"] = ok;
  report["holds"] = ok;
  return report;
}

json general_position(const Document& doc, const Options& opts) {
  if (opts.points.empty()) throw InputError("no points; use --points");
  std::vector<RationalVector> pts;
  if (opts.points.find(',') != std::string::npos) {
    std::stringstream in(opts.points);
    std::string item;
    while (std::getline(in, item, ';')) pts.push_back(parse_rational_list(item));
  } else {
    pts = doc.points(opts.points);
  }
  const bool ok = general_position4(pts);
  json p = json::array();
  for (const auto& v : pts) p.push_back(vec(v));
  json report;
  report["points"] = p;
  report["general_position"] = ok;
  report["holds"] = ok;
  return report;
}

std::vector<MultiVector> selected_bivectors(const Document& doc, const Options& opts, std::size_t lo, std::size_t hi) {
  if (opts.bivectors.size() < lo || opts.bivectors.size() > hi) {
    throw InputError("expected " + std::to_string(lo) + (lo == hi ? "" : " or " + std::to_string(hi)) + " --bivector selectors");
  }
  std::vector<MultiVector> out;
  for (const auto& b : opts.bivectors) out.push_back(doc.bivector(b));
  return out;
}

json schouten_command(const Document& doc, const Options& opts) {
  const auto b = selected_bivectors(doc, opts, 1, 2);
  const MultiVector& p = b[0];
  const MultiVector& q = b.size() == 2 ? b[1] : b[0];
  const MultiVector bracket = schouten(p, q);
  json report;
  report["P"] = p.to_string();
  report["Q"] = q.to_string();
  report["bracket"] = bracket.to_string();
  report["zero"] = bracket.is_zero();
  report["holds"] = true;
  return report;
}

json poisson_one(const MultiVector& p) {
  const MultiVector bracket = schouten(p, p);
  json r;
  r["bivector"] = p.to_string();
  r["poisson"] = bracket.is_zero();
  r["self_bracket"] = bracket.to_string();
  if (p.nvars() == 3) {
    const Form eta = bivector_to_form(p);
    r["associated_form"] = eta.to_string();
    r["associated_form_integrable"] = is_integrable(eta);
  }
  return r;
}

json poisson_check(const Document& doc, const Options& opts) {
  if (opts.all) {
    std::vector<std::string> names = doc.poisson_names();
    if (names.empty()) {
      for (const auto& n : doc.definition_names()) {
        const Expression e = doc.resolve(n);
        if (const auto* p = std::get_if<MultiVector>(&e); p != nullptr && p->degree() == 2) names.push_back(n);
      }
    }
    if (names.empty()) throw InputError("the document defines no bivectors");
    json results = json::array();
    bool all = true;
    for (const auto& n : names) {
      json r = json{{"name", n}};
      r.update(poisson_one(doc.bivector(n)));
      all = all && r["poisson"].get<bool>();
      results.push_back(r);
    }
    json report;
    report["results"] = results;
    report["holds"] = all;
    return report;
  }
  json report = poisson_one(selected_bivectors(doc, opts, 1, 1)[0]);
  report["holds"] = report["poisson"];
  return report;
}

json pencil_poisson(const Document& doc, const Options& opts) {
  const auto b = selected_bivectors(doc, opts, 2, 2);
  const bool ok = pencil_compatible(b[0], b[1]);
  std::mt19937_64 rng(opts.seed);
  json members = json::array();
  bool agree = is_poisson(b[0] + b[1]) == ok;
  for (int s = 0; s < 3; ++s) {
    Rational lambda = random_rational(rng);
    while (lambda == 0) lambda = random_rational(rng);
    const bool member = is_poisson(b[0] + b[1] * lambda);
    agree = agree && member == ok;
    members.push_back(json{{"lambda", str(lambda)}, {"poisson", member}});
  }
  json report;
  report["P"] = b[0].to_string();
  report["Q"] = b[1].to_string();
  report["bracket"] = schouten(b[0], b[1]).to_string();
  report["compatible"] = ok;
  report["sum_poisson"] = is_poisson(b[0] + b[1]);
  report["pencil_samples"] = members;
  report["cross_checks_agree"] = agree;
  report["holds"] = ok && agree;
  return report;
}

json scaling_defect_command(const Document& doc, const Options& opts) {
  const RatFunc f = doc.function(single(opts.functions, "--function"));
  const MultiVector p = selected_bivectors(doc, opts, 1, 1)[0];
  const MultiVector defect = scaling_defect(f, p);
  json report;
  report["function"] = fn(f, doc.chart());
  report["bivector"] = p.to_string();
  report["defect"] = defect.to_string();
  report["zero"] = defect.is_zero();
  report["holds"] = defect.is_zero();
  return report;
}

json biv_to_form(const Document& doc, const Options& opts) {
  json report;
  if (!opts.bivectors.empty()) {
    const MultiVector p = selected_bivectors(doc, opts, 1, 1)[0];
    const Form eta = bivector_to_form(p);
    report["bivector"] = p.to_string();
    report["form"] = eta.to_string();
    report["round_trip"] = form_to_bivector(eta) == p;
  } else {
    const Form w = doc.form(single(opts.forms, "--form or --bivector"));
    const MultiVector p = form_to_bivector(w);
    report["form"] = w.to_string();
    report["bivector"] = p.to_string();
    report["round_trip"] = bivector_to_form(p) == w;
  }
  report["holds"] = report["round_trip"];
  return report;
}

using Handler = std::function<json(const Document&, const Options&)>;

struct Entry {
  CommandInfo info;
  Handler handler;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"check-integrable", "w /\\ dw = 0 for one-forms", {"form", "all"}}, check_integrable},
      {{"check-decomposable", "integrability of a1 /\\ ... /\\ aq", {"form", "space"}}, check_decomposable},
      {{"rank", "rank of a list of one-forms", {"form", "space"}}, rank_command},
      {{"cone", "quadrics cutting out the integrable cone", {"form", "space", "trials"}}, cone},
      {{"membership", "integrability of a combination", {"form", "space", "vector"}}, membership_command},
      {{"classify-locus", "integrable locus of a three-dimensional space", {"form", "space", "all"}}, classify_locus},
      {{"pencil-theta", "common theta of two forms", {"form", "space"}}, pencil_theta},
      {{"common-theta", "common theta of a list of forms", {"form", "space", "all"}}, common_theta_command},
      {{"web-curvature", "theta and curvature of a planar 3-web", {"form", "space"}}, web_curvature_command},
      {{"rescale-theta", "theta of f w from theta of w", {"theta", "function", "form"}}, rescale_theta_command},
      {{"first-integral", "df /\\ W = 0", {"function", "form", "degree"}}, first_integral},
      {{"axis-identity", "first integrals from weighted sums", {"form", "space", "function"}}, axis_identity},
      {{"gv-verify", "Godbillon-Vey sequence conditions", {"sequence", "all"}}, gv_verify},
      {{"classify-transverse", "transverse structure from a candidate sequence", {"form", "sequence"}},
       classify_transverse_command},
      {{"veronese-poly", "w(t) /\\ dw(t) as a polynomial in t", {"family", "form"}}, veronese_poly_command},
      {{"veronese-check", "integrability of w(t) from samples", {"family", "form", "samples"}}, veronese_check_command},
      {{"minimal-degree", "deg = span dimension - dimension + 1", {"degree", "span", "dim"}}, minimal_degree},
      {{"general-position", "no three of the points collinear", {"points"}}, general_position},
      {{"schouten", "Schouten bracket of bivectors", {"bivector"}}, schouten_command},
      {{"poisson-check", "[P, P] = 0", {"bivector", "all"}}, poisson_check},
      {{"pencil-poisson", "[P, Q] = 0 for Poisson P, Q", {"bivector"}}, pencil_poisson},
      {{"scaling-defect", "[fP, fP] - 2 f P#(df) /\\ P", {"function", "bivector"}}, scaling_defect_command},
      {{"biv-to-form", "bivector and one-form on three variables", {"bivector", "form"}}, biv_to_form},
  };
  return table;
}

void render(std::ostringstream& out, const json& value, int indent);

void render_scalar(std::ostringstream& out, const json& value) {
  if (value.is_string()) {
    out << value.get<std::string>();
  } else {
    out << value.dump();
  }
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

void render(std::ostringstream& out, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      out << pad << key << ":";
      if (is_scalar(v)) {
        out << " ";
        render_scalar(out, v);
        out << "\n";
      } else if (v.empty()) {
        out << (v.is_array() ? " []\n" : " {}\n");
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        out << " [";
        bool first = true;
        for (const auto& x : v) {
          out << (first ? "" : ", ");
          render_scalar(out, x);
          first = false;
        }
        out << "]\n";
      } else {
        out << "\n";
        render(out, v, indent + 2);
      }
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (is_scalar(v)) {
        out << pad << "- ";
        render_scalar(out, v);
        out << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        out << pad << "- [";
        bool first = true;
        for (const auto& x : v) {
          out << (first ? "" : ", ");
          render_scalar(out, x);
          first = false;
        }
        out << "]\n";
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad;
    render_scalar(out, value);
    out << "\n";
  }
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Outcome run(const std::string& command, const Document& doc, const Options& opts) {
  Outcome outcome;
  json& report = outcome.report;
  report["command"] = command;
  const auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.name == command; });
  try {
    if (it == entries().end()) throw InputError("unknown command '" + command + "'");
    json body = it->handler(doc, opts);
    const bool holds = body["holds"].get<bool>();
    body.erase("holds");
    report.update(body);
    report["holds"] = holds;
    outcome.exit_code = holds ? 0 : 1;
  } catch (const InputError& e) {
    report["holds"] = false;
    report["error"] = "input error";
    report["message"] = e.what();
    outcome.exit_code = 2;
  } catch (const ArithmeticError& e) {
    report["holds"] = false;
    report["error"] = "input error";
    report["message"] = e.what();
    outcome.exit_code = 2;
  } catch (const NoCommonTheta& e) {
    report["holds"] = false;
    report["error"] = "no common theta";
    report["message"] = e.what();
    report["inconsistent_prefix"] = e.prefix();
    report["residual"] = e.residual().to_string();
    outcome.exit_code = 1;
  } catch (const PreconditionError& e) {
    report["holds"] = false;
    report["error"] = "precondition failed";
    report["message"] = e.what();
    outcome.exit_code = 1;
  } catch (const StructuralError& e) {
    report["holds"] = false;
    report["error"] = "structure not found";
    report["message"] = e.what();
    outcome.exit_code = 1;
  }
  return outcome;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace folia::cli
