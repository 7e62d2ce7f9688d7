#pragma once

#include <stdexcept>
#include <string>

namespace qcb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

/// Covariance matrix violates the uncertainty principle (min nu < 1/2 - tol).
class UncertaintyViolationError : public Error {
 public:
  using Error::Error;
};

/// Gibbs matrix requested for a spectrum with pure-mode directions.
class SingularSpectrumError : public Error {
 public:
  using Error::Error;
};

class InvalidCmError : public Error {
 public:
  using Error::Error;
};

class NotGaussianFamilyError : public Error {
 public:
  using Error::Error;
};

class NotDvFamilyError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class DimensionTooLargeError : public Error {
 public:
  using Error::Error;
};

class NotCovariantError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its legal domain (also used for OutOfRange and
/// DivergentAtZero conditions).
class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Channel/protocol spec text could not be parsed; carries the byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qcb
