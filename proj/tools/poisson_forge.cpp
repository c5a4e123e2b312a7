// poisson-forge: batch front end. Reads one JSON problem descriptor from a
// file (or stdin), dispatches to the library, prints a deterministic JSON
// report. Exit codes: 0 property holds / value computed, 1 property fails
// with a counterexample, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "forge/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"poisson-forge: exact Poisson algebra computations"};
  std::string input = "-";
  app.add_option("input", input, "problem descriptor JSON file ('-' reads stdin)");
  std::optional<int> bound;
  std::optional<int> trials;
  std::optional<std::int64_t> seed;
  std::optional<std::string> order;
  app.add_option("--bound", bound, "override options.degree_bound");
  app.add_option("--trials", trials, "override options.trials");
  app.add_option("--seed", seed, "override options.seed");
  app.add_option("--order", order, "override options.order (grevlex|grlex|lex)");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "poisson-forge: cannot open " << input << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  forge::Json descriptor = forge::Json::parse(text, nullptr, false);
  if (descriptor.is_discarded()) {
    forge::Json report;
    report["command"] = "?";
    report["status"] = "error";
    report["payload"] = {{"code", "bad_input"}, {"message", "malformed JSON"}};
    report["diagnostics"] = forge::Json::array();
    std::cout << report.dump(2) << "\n";
    return 2;
  }

  forge::Json overrides = forge::Json::object();
  if (bound) overrides["degree_bound"] = *bound;
  if (trials) overrides["trials"] = *trials;
  if (seed) overrides["seed"] = *seed;
  if (order) overrides["order"] = *order;

  auto result = forge::run_descriptor(descriptor, overrides);
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
