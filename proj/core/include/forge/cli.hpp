#pragma once

// JSON problem descriptors in, deterministic JSON reports out. One command
// per invocation; exit code 0 = property holds / value computed, 1 = a
// negative answer with counterexample, 2 = input or usage error.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "forge/bracket.hpp"

namespace forge {

using Json = nlohmann::ordered_json;

struct CliOptions {
  int degree_bound = 4;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string order = "grevlex";
};

struct RunResult {
  Json report;
  int exit_code = 0;
};

PoissonStructure parse_structure(const Json& j, const std::string& path = "structure");

// Dispatches a full descriptor {command, structure, operands, options}.
// Never throws: malformed input becomes a status="error" report with exit 2.
RunResult run_descriptor(const Json& descriptor);

// Option overrides applied on top of the descriptor's options block.
RunResult run_descriptor(const Json& descriptor, const Json& option_overrides);

}  // namespace forge
