#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asgl {

// Input is outside an operation's domain (zero denominator, singular curve...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Valuation of the zero element was requested.
class ZeroValuationError : public DomainError {
 public:
  ZeroValuationError() : DomainError("valuation of zero is undefined") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace asgl
