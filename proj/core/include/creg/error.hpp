#pragma once

#include <stdexcept>
#include <string>

namespace creg {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: inhomogeneous data, ring mismatch, dimension mismatch.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exponent or degree overflow.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A computation that cannot be completed within the configured bounds
/// (oracle cap, window cap, retry budget).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An operation's mathematical precondition does not hold for the input,
/// e.g. a Koszul sequence whose homology is not of finite length.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, int index, long long value)
      : Error(what), index_(index), value_(value) {}
  int index() const noexcept { return index_; }
  long long value() const noexcept { return value_; }

 private:
  int index_;
  long long value_;
};

}  // namespace creg
