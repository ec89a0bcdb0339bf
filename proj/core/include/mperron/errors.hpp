#pragma once

#include <stdexcept>
#include <string>

namespace mperron {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A closed form disagreed with its independent oracle, or a proved property
// failed on a concrete instance. Never recoverable; exit code 3.
class OracleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Root disks could not be separated or placed within the escalation budget.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mperron
