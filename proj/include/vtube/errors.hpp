#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vtube {

// Malformed Gauss-code text. position is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed text whose crossings do not pair up.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(int crossing, const std::string& what)
      : std::invalid_argument(what), crossing_(crossing) {}
  int crossing() const noexcept { return crossing_; }

 private:
  int crossing_;
};

// A move whose locus no longer matches the code it is applied to.
class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs outside an operation's domain (open components for the bracket,
// n < 2m, missing stack pairing, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vtube
