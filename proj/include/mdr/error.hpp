#pragma once

#include <stdexcept>
#include <string>

namespace mdr {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A weight was evaluated outside the region it is defined on.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Malformed grid, weight, or report text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_domain(const std::string& what);
[[noreturn]] void throw_coverage(const std::string& what);

}  // namespace mdr
