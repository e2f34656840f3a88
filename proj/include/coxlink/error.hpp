#pragma once

#include <stdexcept>
#include <string>

namespace coxlink {

// Every error carries the module it came from and a one-line remedy, so the
// CLI can print something actionable without knowing the error's origin.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what, std::string remedy)
      : std::runtime_error(what), module_(std::move(module)), remedy_(std::move(remedy)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& remedy() const noexcept { return remedy_; }

 private:
  std::string module_;
  std::string remedy_;
};

/// Bad argument shape or value (exit status 2 in the CLI).
class ArgumentError : public Error {
  using Error::Error;
};

/// Request beyond the sizes this tool is built for (factorial blowup).
class CapacityError : public Error {
  using Error::Error;
};

/// A structural invariant of a value was violated.
class InvariantError : public Error {
  using Error::Error;
};

/// Text could not be parsed; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::string module, const std::string& what, std::size_t position, std::string remedy)
      : Error(std::move(module), what + " at position " + std::to_string(position), std::move(remedy)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A localization term is undefined because a tangent weight vanishes.
class DegenerateChartError : public Error {
  using Error::Error;
};

/// A series expansion is not locally finite for the requested grading.
class ExpansionError : public Error {
  using Error::Error;
};

/// An arithmetic precondition failed (zero divisor, singular matrix, ...).
class ArithmeticError : public Error {
  using Error::Error;
};

}  // namespace coxlink
