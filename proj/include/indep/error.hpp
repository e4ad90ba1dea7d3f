#pragma once

#include <stdexcept>
#include <string>

namespace indep {

/// Malformed cycle notation or pair specification.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two permutations (or groups) over different point sets were combined.
class DegreeMismatch : public std::invalid_argument {
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("degree mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// A configured size limit was hit. `budget()` names the limit
/// ("max_group_order", "endo_budget" or "iso_budget").
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::string budget, std::size_t limit)
      : std::runtime_error(budget + " exceeded (limit " +
                           std::to_string(limit) + ")"),
        budget_(std::move(budget)), limit_(limit) {}

  const std::string &budget() const noexcept { return budget_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::string budget_;
  std::size_t limit_;
};

} // namespace indep
