#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bassinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// A quotient ring that should be finite dimensional is not.
class NotIsolated : public Error {
 public:
  using Error::Error;
};

class SingularLocusNotAtOrigin : public Error {
 public:
  using Error::Error;
};

// 1 lies in the ideal: the hypersurface has no singular point.
class SmoothPoint : public Error {
 public:
  using Error::Error;
};

class NotQuasiHomogeneous : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class StaircaseLimitExceeded : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class InconsistentInputs : public Error {
 public:
  using Error::Error;
};

class InconsistentDeduction : public Error {
 public:
  using Error::Error;
};

class NoGradedFiber : public Error {
 public:
  using Error::Error;
};

class VerdictRefused : public Error {
 public:
  using Error::Error;
};

}  // namespace bassinv
