#include <iostream>

#include <CLI11.hpp>

#include "folia/cli/commands.hpp"

using folia::cli::Options;

namespace {

void add_option(CLI::App& sub, const std::string& name, Options& opts) {
  if (name == "form") {
    sub.add_option("--form", opts.forms, "one-form (definition name or expression); repeatable");
  } else if (name == "function") {
    sub.add_option("--function", opts.functions, "function (definition name or expression); repeatable");
  } else if (name == "bivector") {
    sub.add_option("--bivector", opts.bivectors, "bivector (definition name or expression); repeatable");
  } else if (name == "space") {
    sub.add_option("--space", opts.space, "named space of one-forms");
  } else if (name == "family") {
    sub.add_option("--family", opts.family, "named family w_0, ..., w_k");
  } else if (name == "sequence") {
    sub.add_option("--sequence", opts.sequence, "named candidate sequence");
  } else if (name == "theta") {
    sub.add_option("--theta", opts.theta, "one-form theta");
  } else if (name == "vector") {
    sub.add_option("--vector", opts.vector, "coefficient vector, named or \"1,0,1/2\"");
  } else if (name == "points") {
    sub.add_option("--points", opts.points, "named point list or \"1,0,0;0,1,0;...\"");
  } else if (name == "samples") {
    sub.add_option("--samples", opts.samples, "parameter samples, named or \"0,1,2\"");
  } else if (name == "degree") {
    sub.add_option("--degree", opts.degree, "degree");
  } else if (name == "span") {
    sub.add_option("--span", opts.span, "dimension of the span");
  } else if (name == "dim") {
    sub.add_option("--dim", opts.dimension, "dimension");
  } else if (name == "trials") {
    sub.add_option("--trials", opts.trials, "random cross-check samples")->check(CLI::NonNegativeNumber);
  } else if (name == "all") {
    sub.add_flag("--all", opts.all, "run on every applicable document entry");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrability checks for Pfaffian systems over the rationals"};
  app.require_subcommand(1);
  std::string input;
  bool as_json = false;
  Options opts;
  app.add_option("-i,--input", input, "JSON document with variables and definitions");
  app.add_flag("--json", as_json, "print the report as JSON");
  app.add_option("--seed", opts.seed, "seed for randomized cross-checks");

  for (const auto& info : folia::cli::command_table()) {
    CLI::App* sub = app.add_subcommand(info.name, info.summary);
    sub->fallthrough();
    for (const auto& name : info.options) add_option(*sub, name, opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  folia::cli::Outcome outcome;
  try {
    const auto doc = input.empty() ? folia::cli::Document() : folia::cli::Document::from_file(input);
    outcome = folia::cli::run(command, doc, opts);
  } catch (const folia::InputError& e) {
    outcome.exit_code = 2;
    outcome.report["command"] = command;
    outcome.report["holds"] = false;
    outcome.report["error"] = "input error";
    outcome.report["message"] = e.what();
  }

  if (as_json) {
    std::cout << outcome.report.dump(2) << "\n";
  } else {
    std::cout << folia::cli::render_text(outcome.report);
  }
  return outcome.exit_code;
}
