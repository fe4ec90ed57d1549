#pragma once

#include <stdexcept>
#include <string>

namespace catgb {

// Malformed textual/JSON input. CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds the configured work bounds. Exit code 3.
struct bounds_error : std::runtime_error {
  explicit bounds_error(const std::string& what) : std::runtime_error(what) {}
};

// Domain errors (std::domain_error) map to exit code 4.

}  // namespace catgb
