#pragma once

#include <stdexcept>
#include <string>

namespace cosetcover {

// Exit-code mapping used by the CLI: InfeasibleError -> 1, BudgetError -> 2,
// UsageError -> 64. Library code throws; only the CLI translates.

struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cosetcover
