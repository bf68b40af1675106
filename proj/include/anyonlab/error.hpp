#ifndef ANYONLAB_ERROR_HPP
#define ANYONLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anyonlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (polynomial text, parameters, flags).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InvalidInput(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Exponent arithmetic left the supported range.
class OverflowError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A configurable resource cap (pair queue, search length, matrix size) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for this code (e.g. it is not topological).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Two patterns of one hopping trace carry different charges.
class ChargeViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace anyonlab

#endif  // ANYONLAB_ERROR_HPP
