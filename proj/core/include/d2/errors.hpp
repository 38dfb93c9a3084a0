#pragma once

#include <stdexcept>
#include <string>

namespace d2 {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("operands belong to different groups") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A matrix exceeds the configured dimension limit.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A rational solution exists but is not integral.
class NonIntegral : public Error {
 public:
  using Error::Error;
};

class RelatorNotSatisfied : public Error {
 public:
  using Error::Error;
};

class NotExact : public Error {
 public:
  NotExact(std::string stage, const std::string& detail)
      : Error("complex is not exact (" + stage + "): " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

class TargetNotExact : public Error {
 public:
  using Error::Error;
};

class CongruenceViolation : public Error {
 public:
  using Error::Error;
};

class CoprimalityViolation : public Error {
 public:
  using Error::Error;
};

class RangeViolation : public Error {
 public:
  using Error::Error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace d2
