#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burchlab {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  RankMismatch() : Error("free-module ranks do not match") {}
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class ZeroColonDivisor : public Error {
 public:
  ZeroColonDivisor() : Error("colon by the zero ideal") {}
};

class ZeroIdeal : public Error {
 public:
  ZeroIdeal() : Error("operation undefined for the zero ideal") {}
};

class NotArtinian : public Error {
 public:
  NotArtinian() : Error("quotient ring has infinite length") {}
};

class RegularSequenceNotFound : public Error {
 public:
  using Error::Error;
};

/// A mathematical self-check failed (exactness, minimality, sandwich ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace burchlab
