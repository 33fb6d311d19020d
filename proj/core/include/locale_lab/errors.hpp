#pragma once

#include <stdexcept>
#include <string>

namespace lab {

/// Base class for every failure the library can diagnose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failures caused by the input (rejected data, not bugs).
class InputError : public Error {
 public:
  using Error::Error;
};

class NotAPartialOrder final : public InputError {
 public:
  using InputError::InputError;
};

class NotALattice final : public InputError {
 public:
  using InputError::InputError;
};

class NotDistributive final : public InputError {
 public:
  NotDistributive(int a, int b, int c, const std::string& msg)
      : InputError(msg), a(a), b(b), c(c) {}
  /// Witnessing triple: meet(a, join(b, c)) != join(meet(a, b), meet(a, c)).
  int a, b, c;
};

class NotATopology final : public InputError {
 public:
  using InputError::InputError;
};

class NotPrime final : public InputError {
 public:
  using InputError::InputError;
};

class NotPrimes final : public InputError {
 public:
  using InputError::InputError;
};

class NotMeetOfPrimes final : public InputError {
 public:
  using InputError::InputError;
};

class NotACoframe final : public InputError {
 public:
  using InputError::InputError;
};

class NotSpatial final : public InputError {
 public:
  using InputError::InputError;
};

class MixedSources final : public InputError {
 public:
  using InputError::InputError;
};

class ParseError final : public InputError {
 public:
  ParseError(int line, const std::string& reason)
      : InputError("line " + std::to_string(line) + ": " + reason),
        line(line) {}
  int line;
};

class IoError final : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size cap was exceeded; the phase is skippable, not a failure.
class CapExceeded final : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same value disagreed. Always a bug.
class CrossCheckError final : public Error {
 public:
  using Error::Error;
};

}  // namespace lab
