#ifndef BIORDER_ERRORS_HPP
#define BIORDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biorder {

// Malformed or out-of-contract input (bad JSON, cycles, loops, out-of-range indices...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration oracle would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biorder

#endif  // BIORDER_ERRORS_HPP
