#pragma once

#include <stdexcept>
#include <string>

namespace chordlab {

/// Malformed or out-of-contract input (wrong cardinality, bad file, bad flag).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented size cap was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive proof recipe failed. Any instance is a counterexample to a
/// published theorem and must be surfaced, never swallowed.
class CounterexampleAlert : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chordlab
