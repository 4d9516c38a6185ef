#pragma once

#include <stdexcept>
#include <string>

namespace treecrit {

/// Malformed or out-of-range input: bad vertex ids, self-loops, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotATreeError : public InputError {
 public:
  using InputError::InputError;
};

class NotPrimeError : public InputError {
 public:
  using InputError::InputError;
};

/// An exhaustive search was asked to run past its size limit.
class GuardExceeded : public std::length_error {
 public:
  GuardExceeded(const std::string& what, int n, int limit)
      : std::length_error(what + ": n=" + std::to_string(n) +
                          " exceeds limit " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  int n() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

 private:
  int n_;
  int limit_;
};

}  // namespace treecrit
