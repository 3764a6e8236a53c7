#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "folia/cli/parser.hpp"

namespace folia::cli {

// Input document:
//   {
//     "variables":   ["x", "y", "z"],
//     "definitions": {"w": "y*d(x) - x*d(y)", "f": "x/y"},
//     "spaces":      {"W": ["w", "d(z)"]},
//     "families":    {"V": ["d(x)", "d(y)", "y*d(z)"]},
//     "sequences":   {"S": ["y*d(x)", "-(1/y)*d(y)"]},
//     "poisson":     {"P": "D(x) /\\ D(y)"},
//     "vectors":     {"a": ["1", "0", "1/2"]},
//     "points":      {"Q": [["1", "0", "0"], ["0", "1", "0"]]}
//   }
// List entries and command selectors name a definition or give an
// expression inline. Rationals are strings "p/q" or JSON integers.
class Document {
 public:
  Document() = default;
  // Throws InputError (ParseError for bad expressions) on malformed input
  // or unresolved references.
  explicit Document(const nlohmann::ordered_json& doc);

  static Document from_file(const std::string& path);
  static Document from_text(const std::string& text);

  const Chart& chart() const { return chart_; }
  const std::vector<std::string>& definition_names() const { return order_; }

  Expression resolve(const std::string& ref) const;
  RatFunc function(const std::string& ref) const;
  // Forms and multivectors of a fixed degree.
  Form form(const std::string& ref, int degree = 1) const;
  MultiVector bivector(const std::string& ref) const;

  std::vector<Form> space(const std::string& name) const;
  std::vector<Form> family(const std::string& name) const;
  std::vector<Form> sequence(const std::string& name) const;
  RationalVector vector(const std::string& ref) const;
  std::vector<RationalVector> points(const std::string& name) const;

  std::vector<std::string> space_names() const { return keys(spaces_); }
  std::vector<std::string> family_names() const { return keys(families_); }
  std::vector<std::string> sequence_names() const { return keys(sequences_); }
  const std::vector<std::string>& poisson_names() const { return poisson_; }

 private:
  template <typename M>
  static std::vector<std::string> keys(const M& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
  }
  std::vector<Form> forms(const std::vector<std::string>& refs) const;

  Chart chart_;
  std::vector<std::string> order_;
  std::map<std::string, Expression> definitions_;
  std::map<std::string, std::vector<std::string>> spaces_, families_, sequences_;
  std::vector<std::string> poisson_;
  std::map<std::string, RationalVector> vectors_;
  std::map<std::string, std::vector<RationalVector>> points_;
};

// "1, 0, 1/2" as a rational vector.
RationalVector parse_rational_list(const std::string& text);

}  // namespace folia::cli
