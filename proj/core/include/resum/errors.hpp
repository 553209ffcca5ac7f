#pragma once

#include <stdexcept>
#include <string>

namespace resum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within tolerance of) a pole of the gamma function.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& what, int index = -1)
      : Error(what), index_(index) {}
  /// Offending coefficient index for transform poles, -1 otherwise.
  int index() const noexcept { return index_; }

private:
  int index_;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

/// A non-integer power of a non-positive base was requested.
class ComplexValueError : public Error {
public:
  using Error::Error;
};

class ZeroLeadingCoefficientError : public Error {
public:
  using Error::Error;
};

class DegenerateOrderError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class UnsupportedKindError : public Error {
public:
  using Error::Error;
};

/// Amplitude curve has no value at the requested control parameter.
class UndefinedError : public Error {
public:
  using Error::Error;
};

class NoDefinedPointError : public Error {
public:
  using Error::Error;
};

class EmptySolutionSetError : public Error {
public:
  using Error::Error;
};

class ZeroReferenceCoefficientError : public Error {
public:
  using Error::Error;
};

}  // namespace resum
