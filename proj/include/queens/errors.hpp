#pragma once

#include <stdexcept>
#include <string>

namespace queens {

// Bad input or unmet precondition. The CLI maps this to exit code 2.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Search node budget exhausted. The CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace queens
