#pragma once

#include <stdexcept>
#include <string>

namespace cantor4 {

// Input outside the mathematical domain of an operation (non-finite t, |rho| != 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke a documented precondition (bad index, non-admissible bank, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Filter parameters that admit no unitary completion. `equation()` names the
// violated constraint ("weight_duality", "unit_rows", "row_orthogonality_12", ...).
class InfeasibleParameters : public std::invalid_argument {
 public:
  InfeasibleParameters(std::string equation, const std::string& what)
      : std::invalid_argument(what), equation_(std::move(equation)) {}
  const std::string& equation() const noexcept { return equation_; }

 private:
  std::string equation_;
};

// Size guard tripped (word length, level, index type).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A function does not have the g(x) * h(x, y) shape required for projection.
class UnsupportedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cantor4
