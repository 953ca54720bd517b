#pragma once

#include <stdexcept>
#include <string>

namespace pickett {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Failures of the model equations or the numerical machinery. The CLI maps
// these to exit status 3.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// w2 left the open interval (w1, w) so the image-force log term is undefined.
class DegenerateBarrier : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Image-force-lowered barrier height dropped to zero or below.
class NegativeBarrier : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class OutOfRange : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Trace/metric preconditions.
class EmptyTrace : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class LengthMismatch : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DegenerateReference : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NoOverlap : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Configuration problems; exit status 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

class ParseError : public ConfigError {
public:
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

class UnknownKey : public ConfigError {
public:
  using ConfigError::ConfigError;
};

class InvariantViolation : public ConfigError {
public:
  InvariantViolation(std::string field, const std::string& what)
      : ConfigError(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// File could not be opened, read or written. Exit status 4.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace pickett
