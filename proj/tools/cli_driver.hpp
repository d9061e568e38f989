#pragma once
#include <string>
#include <vector>

namespace helly::cli {

struct RunResult {
  int exit_code = 0;   // 0 ok, 1 domain error, 2 malformed input, 3 resource
  std::string output;  // JSON, newline-terminated
};

struct Options {
  std::size_t max_order = 512;   // brute-force group order bound
  std::size_t max_subset = 0;    // 0: derive from the input size
  unsigned long seed = 0;        // reserved for randomized search order
};

// Dispatch one verb on one JSON input document.
RunResult run_verb(const std::string& verb, const std::string& input,
                   const Options& opts = {});

std::vector<std::string> verb_names();

}  // namespace helly::cli
