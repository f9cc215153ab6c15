#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wvc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad graph construction, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input lies outside the class an algorithm was called for.
// `witness` holds the offending vertices (an induced pattern, a triad,
// an odd cycle, ...) in the caller's vertex numbering.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::string pattern,
                    std::vector<int> witness)
      : Error(what), pattern_(std::move(pattern)), witness_(std::move(witness)) {}

  const std::string& pattern() const noexcept { return pattern_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string pattern_;
  std::vector<int> witness_;
};

// The search engines exceeded their node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wvc
