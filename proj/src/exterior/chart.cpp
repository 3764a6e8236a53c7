#include "folia/exterior/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "folia/error.hpp"

namespace folia {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Chart::Chart(std::vector<std::string> names) {
  if (names.empty()) throw InputError("a chart needs at least one variable");
  if (names.size() > 64) throw InputError("charts are limited to 64 variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (n == "d" || n == "D") throw InputError("'d' and 'D' are reserved for differentials and vector fields");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Chart::index_of(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

Chart Chart::extended(const std::string& preferred) const {
  std::string candidate = preferred;
  for (int k = 1; index_of(candidate); ++k) candidate = preferred + "_" + std::to_string(k);
  std::vector<std::string> names = *names_;
  names.push_back(candidate);
  return Chart(std::move(names));
}

}  // namespace folia
