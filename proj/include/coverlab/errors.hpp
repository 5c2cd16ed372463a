#pragma once

#include <stdexcept>
#include <string>

namespace coverlab {

/// A configured search or period budget was exhausted. Results are never
/// sampled or truncated silently; callers see this or an explicit flag.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The prime sieve is too small for the requested argument.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coverlab
