#pragma once

#include <stdexcept>
#include <string>

namespace bnls {

// Error categories map 1:1 onto CLI exit codes (see tools/bnls.cpp):
// config=2, resource=3, numerical=4; bracket/assertion failures exit 5.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate inputs, blow-up, undefined ratios.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bnls
