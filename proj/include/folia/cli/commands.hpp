#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "folia/cli/document.hpp"

namespace folia::cli {

// Object selectors and parameters shared by all subcommands. Selectors
// name document entries or give expressions inline.
struct Options {
  std::vector<std::string> forms;
  std::vector<std::string> functions;
  std::vector<std::string> bivectors;
  std::string space;
  std::string family;
  std::string sequence;
  std::string theta;
  std::string vector;
  std::string points;
  std::string samples;
  std::optional<long> degree, span, dimension;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  bool all = false;
};

struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> options;  // option names accepted besides --input, --json, --seed
};

const std::vector<CommandInfo>& command_table();

// Exit codes: 0 the checked property holds, 1 it fails or a hypothesis
// of the check is violated, 2 malformed input.
struct Outcome {
  int exit_code = 0;
  nlohmann::ordered_json report;
};

Outcome run(const std::string& command, const Document& doc, const Options& opts);

// Plain-text rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace folia::cli
