#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linearr {

class ParallelLinesError : public std::invalid_argument {
 public:
  ParallelLinesError() : std::invalid_argument("lines are parallel (equal slopes)") {}
};

class DuplicateSlopeError : public std::invalid_argument {
 public:
  explicit DuplicateSlopeError(const std::string& slope)
      : std::invalid_argument("duplicate slope " + slope + " violates nearly general position") {}
};

class InfeasibleSignVectorError : public std::invalid_argument {
 public:
  InfeasibleSignVectorError() : std::invalid_argument("sign vector does not describe a cell") {}
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed family text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class VerticalLineError : public ParseError {
 public:
  VerticalLineError(std::size_t line, const std::string& token)
      : ParseError(line, "vertical line not representable (slope token '" + token + "')") {}
};

class EmptyViewportError : public std::invalid_argument {
 public:
  EmptyViewportError() : std::invalid_argument("viewport contains no part of any line") {}
};

}  // namespace linearr
