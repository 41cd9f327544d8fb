#pragma once

#include <stdexcept>
#include <string>

namespace basekit {

/// Invalid argument or malformed input (bad degree, bad spec, out-of-range point).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search hit its node ceiling. Never carries a partial result.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("budget exceeded: " + what) {}
};

}  // namespace basekit
