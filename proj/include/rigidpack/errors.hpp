#pragma once

#include <stdexcept>
#include <string>

namespace rigidpack {

/// Input does not satisfy an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A randomized oracle contradicted itself (an accepted set later rejected).
/// Callers may reseed and retry.
class OracleInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rigidpack
