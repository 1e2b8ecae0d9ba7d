#pragma once

#include <stdexcept>
#include <string>

namespace tcg {

/// Malformed or out-of-contract input (bad syntax, bad indices, invalid tables).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation exceeded its configured resource budget. Never a wrong answer.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tcg
