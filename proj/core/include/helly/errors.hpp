#pragma once
#include <stdexcept>
#include <string>

namespace helly {

// Precondition or domain violation: the input is well-formed but outside
// the operation's contract (e.g. kappa of the trivial group).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad JSON, unknown fields, wrong shapes.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search bound was exceeded (group order, subset size, ...).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helly
