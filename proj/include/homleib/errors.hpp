#pragma once

#include <stdexcept>
#include <string>

namespace homleib {

/// Shapes of operands do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string precondition, const std::string& detail)
      : std::invalid_argument(precondition + ": " + detail), precondition_(std::move(precondition)) {}
  [[nodiscard]] const std::string& precondition() const { return precondition_; }

 private:
  std::string precondition_;
};

/// A mechanically checked theorem failed on concrete input. Never expected on
/// valid data; carries the diagnostic text.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Line and column are 1-based; 0 means unknown.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(format(source, line, column, message)),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  [[nodiscard]] const std::string& source() const { return source_; }
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& source, std::size_t line, std::size_t column,
                            const std::string& message) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line) + ":" + std::to_string(column);
    return out + ": " + message;
  }
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace homleib
