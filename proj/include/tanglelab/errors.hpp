#pragma once

#include <stdexcept>
#include <string>

namespace tanglelab {

// Malformed or out-of-domain input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotRational : public InputError {
 public:
  using InputError::InputError;
};

// A search or enumeration ran out of its configured budget (exit code 3).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed (exit code 4).
class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tanglelab
