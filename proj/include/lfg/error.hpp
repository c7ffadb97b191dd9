#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfg {

/// Raised when a computation would exceed a configured size limit
/// (vertex budget, enumeration budget, point budget). Kept distinct from
/// std::invalid_argument so callers can tell "too big" from "wrong".
class BudgetError : public std::runtime_error
{
public:
  BudgetError(std::string what, std::size_t limit)
  : std::runtime_error(std::move(what)), limit_(limit)
  {}

  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t limit_;
};

/// Malformed text input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string &what, std::size_t line)
  : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
    line_(line)
  {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct Budgets
{
  std::size_t vertices = 1'000'000;
  std::size_t enumeration = 20'000;
  std::size_t points = 100'000;
};

} // namespace lfg
