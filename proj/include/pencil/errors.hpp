#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pencil {

/// Malformed structure, eigenvalue or assignment text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates an operation's preconditions
/// (inconsistent block counts, size mismatch, symbolic eigenvalue where a
/// value is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pencil
