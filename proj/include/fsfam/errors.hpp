#pragma once

#include <stdexcept>
#include <string>

namespace fsfam {

/// Bad input from the caller: an even or composite prime, a trivial label,
/// an unwritable output path. The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold by construction did not.
/// The CLI maps this to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Overflow of fixed-width integers or division by zero. Never silent.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) {
    throw InvariantViolation(what);
  }
}

}  // namespace fsfam
