#pragma once

#include <stdexcept>
#include <string>

namespace netsel {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (edge lists, label files, profiles).
struct ParseError : Error {
  ParseError(const std::string& msg, long line) : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
  long line;
};

// A walk sum does not converge for the requested decay factor.
struct DivergenceError : Error {
  explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// Iteration budget exhausted before reaching the tolerance.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& msg, double residual)
      : Error(msg + " (last residual " + std::to_string(residual) + ")"), residual(residual) {}
  double residual;
};

// Refusal: the instance exceeds a hard size cap of an exact algorithm.
struct SizeCapError : Error {
  explicit SizeCapError(const std::string& msg) : Error(msg) {}
};

// Precondition violation on caller-supplied arguments.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace netsel
