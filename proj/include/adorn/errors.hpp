#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adorn {

/// Thrown by the presentation parser; `position` is a 0-based character
/// offset into the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Thrown when an enumeration or coset budget is exhausted. For the
/// derived-series driver this is data (an Unknown verdict), not a failure.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace adorn
