#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace folia {

// Ordered coordinate names of an affine chart. Cheap to copy; charts
// compare equal when their names agree.
class Chart {
 public:
  Chart() : names_(std::make_shared<const std::vector<std::string>>()) {}
  // Throws InputError for empty, duplicate or malformed names, or more
  // than 64 variables.
  explicit Chart(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  std::span<const std::string> names() const { return *names_; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // This chart with one more coordinate appended. If `preferred` is taken
  // a numeric suffix is added.
  Chart extended(const std::string& preferred) const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace folia
