#pragma once

#include <stdexcept>
#include <string>

namespace lsa {

/// Invalid value or argument (zero divisor, non-alternating cocycle, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Operation not defined over the scalar ring of its input.
class RingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A structure that was supposed to satisfy an identity does not.
class IdentityFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace lsa
