#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulersum {

// Argument outside the mathematical domain of an operation (ln of a
// non-positive number, a zeta value at 1, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivergentSeries : std::domain_error {
  using std::domain_error::domain_error;
};

// The tail machinery could not certify the requested accuracy.
struct AccelerationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The configured term budget is too small for the requested accuracy.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UncoveredSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace eulersum
