#ifndef RSENTROPY_ERRORS_HPP
#define RSENTROPY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsentropy {

// Malformed substitution file. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// The substitution violates a structural requirement (semi-compatibility,
// primitivity, lambda > 1) needed by the requested computation.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured memory cap. Never a silent truncation.
class CapacityError : public std::runtime_error {
public:
  CapacityError(std::size_t cap, int largest_feasible_level, const std::string& what)
      : std::runtime_error(what), cap_(cap), largest_feasible_level_(largest_feasible_level) {}

  std::size_t cap() const noexcept { return cap_; }
  // Highest level that completed under the cap; 0 if none did.
  int largest_feasible_level() const noexcept { return largest_feasible_level_; }

private:
  std::size_t cap_;
  int largest_feasible_level_;
};

class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsentropy

#endif  // RSENTROPY_ERRORS_HPP
