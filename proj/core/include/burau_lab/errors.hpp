#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burau_lab {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact division left a remainder. For v(A) this means A is not a Burau image.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidD : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidSupport : public Error {
 public:
  using Error::Error;
};

class EmptyGeneratorSet : public Error {
 public:
  using Error::Error;
};

class InvalidFraction : public Error {
 public:
  using Error::Error;
};

class InvalidCurvatures : public Error {
 public:
  using Error::Error;
};

// No admissible cone sphere exists for the requested (n, d).
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

class InvalidDims : public Error {
 public:
  using Error::Error;
};

class NoInvariantForm : public Error {
 public:
  using Error::Error;
};

}  // namespace burau_lab
