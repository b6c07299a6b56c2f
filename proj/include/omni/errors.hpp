#pragma once

#include <stdexcept>
#include <string>

namespace omni {

// Argument outside the operation's domain (subset not in V, alpha out of
// range, carrier mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input too large for an exhaustive routine.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Iterative solver gave up (iteration cap, singular system, failed certificate).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm invariant broke. Signals a bug or a non-submodular input
// that slipped past validation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace omni
