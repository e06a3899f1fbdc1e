#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hillperm {

// Base of every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry the structured details.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
 public:
  explicit NotInvertible(std::int64_t gcd)
      : Error("not invertible: gcd with modulus is " + std::to_string(gcd)), gcd_(gcd) {}
  std::int64_t gcd() const noexcept { return gcd_; }

 private:
  std::int64_t gcd_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class NonAsciiCharacter : public Error {
 public:
  explicit NonAsciiCharacter(std::size_t position)
      : Error("character at position " + std::to_string(position) + " is not 7-bit ASCII"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OddOrder : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidIndices : public Error {
 public:
  using Error::Error;
};

class MissingPermutation : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hillperm
