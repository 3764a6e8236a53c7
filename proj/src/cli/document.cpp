#include "folia/cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace folia::cli {

using nlohmann::ordered_json;

namespace {

const ordered_json& field(const ordered_json& doc, const char* key) {
  static const ordered_json empty = ordered_json::object();
  const auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) throw InputError(std::string("'") + key + "' must be an object");
  return *it;
}

Rational rational_value(const ordered_json& v) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("expected a rational as a string or an integer, got " + v.dump());
}

RationalVector rational_vector(const ordered_json& v) {
  if (!v.is_array()) throw InputError("expected a list of rationals, got " + v.dump());
  RationalVector out;
  for (const auto& x : v) out.push_back(rational_value(x));
  return out;
}

std::vector<std::string> string_list(const ordered_json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + " must be a list of expressions");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw InputError(what + " must be a list of expressions");
    out.push_back(x.get<std::string>());
  }
  return out;
}

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  const auto it = m.find(name);
  if (it == m.end()) throw InputError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in '" + text + "'");
    out.push_back(parse_rational(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

Document::Document(const ordered_json& doc) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  const auto vars = doc.find("variables");
  if (vars == doc.end()) throw InputError("document has no 'variables'");
  chart_ = Chart(string_list(*vars, "'variables'"));

  for (const auto& [name, text] : field(doc, "definitions").items()) {
    if (!text.is_string()) throw InputError("definition '" + name + "' must be an expression string");
    if (definitions_.count(name)) throw InputError("duplicate definition '" + name + "'");
    if (chart_.index_of(name)) throw InputError("definition '" + name + "' shadows a variable");
    definitions_.emplace(name, parse_expression(text.get<std::string>(), chart_, &definitions_));
    order_.push_back(name);
  }
  for (const auto& [name, text] : field(doc, "poisson").items()) {
    if (!text.is_string()) throw InputError("bivector '" + name + "' must be an expression string");
    if (definitions_.count(name)) throw InputError("duplicate definition '" + name + "'");
    if (chart_.index_of(name)) throw InputError("bivector '" + name + "' shadows a variable");
    Expression e = parse_expression(text.get<std::string>(), chart_, &definitions_);
    const auto* p = std::get_if<MultiVector>(&e);
    if (p == nullptr || p->degree() != 2) throw InputError("'" + name + "' is not a bivector");
    definitions_.emplace(name, std::move(e));
    order_.push_back(name);
    poisson_.push_back(name);
  }
  for (const auto& [name, list] : field(doc, "spaces").items()) spaces_[name] = string_list(list, "space '" + name + "'");
  for (const auto& [name, list] : field(doc, "families").items()) families_[name] = string_list(list, "family '" + name + "'");
  for (const auto& [name, list] : field(doc, "sequences").items()) {
    sequences_[name] = string_list(list, "sequence '" + name + "'");
  }
  for (const auto& [name, v] : field(doc, "vectors").items()) vectors_[name] = rational_vector(v);
  for (const auto& [name, v] : field(doc, "points").items()) {
    if (!v.is_array()) throw InputError("points '" + name + "' must be a list of coordinate lists");
    for (const auto& p : v) points_[name].push_back(rational_vector(p));
  }
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> allowed = {"variables", "definitions", "poisson", "spaces",
                                                     "families",  "sequences",   "vectors", "points"};
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) throw InputError("unknown field '" + key + "'");
  }

  // every reference must resolve
  for (const auto& [name, refs] : spaces_) forms(refs);
  for (const auto& [name, refs] : families_) forms(refs);
  for (const auto& [name, refs] : sequences_) forms(refs);
}

Document Document::from_text(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return Document(doc);
}

Document Document::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str());
}

Expression Document::resolve(const std::string& ref) const {
  const auto it = definitions_.find(ref);
  if (it != definitions_.end()) return it->second;
  if (chart_.size() == 0) throw InputError("no document given for '" + ref + "'; use --input");
  return parse_expression(ref, chart_, &definitions_);
}

RatFunc Document::function(const std::string& ref) const {
  const Expression e = resolve(ref);
  const auto* f = std::get_if<RatFunc>(&e);
  if (f == nullptr) throw InputError("'" + ref + "' is a " + kind_name(e) + ", expected a function");
  return *f;
}

Form Document::form(const std::string& ref, int deg) const {
  const Expression e = resolve(ref);
  const auto* w = std::get_if<Form>(&e);
  if (w == nullptr || w->degree() != deg) {
    throw InputError("'" + ref + "' is a " + kind_name(e) + " of degree " + std::to_string(cli::degree(e)) +
                     ", expected a form of degree " + std::to_string(deg));
  }
  return *w;
}

MultiVector Document::bivector(const std::string& ref) const {
  const Expression e = resolve(ref);
  const auto* p = std::get_if<MultiVector>(&e);
  if (p == nullptr || p->degree() != 2) throw InputError("'" + ref + "' is not a bivector");
  return *p;
}

std::vector<Form> Document::forms(const std::vector<std::string>& refs) const {
  std::vector<Form> out;
  for (const auto& r : refs) out.push_back(form(r));
  return out;
}

std::vector<Form> Document::space(const std::string& name) const { return forms(lookup(spaces_, name, "space")); }
std::vector<Form> Document::family(const std::string& name) const { return forms(lookup(families_, name, "family")); }
std::vector<Form> Document::sequence(const std::string& name) const {
  return forms(lookup(sequences_, name, "sequence"));
}

RationalVector Document::vector(const std::string& ref) const {
  const auto it = vectors_.find(ref);
  if (it != vectors_.end()) return it->second;
  return parse_rational_list(ref);
}

std::vector<RationalVector> Document::points(const std::string& name) const { return lookup(points_, name, "point list"); }

}  // namespace folia::cli
