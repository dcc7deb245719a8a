#pragma once

#include <stdexcept>
#include <string>

namespace hkd {

// Failure classes. The CLI maps them onto exit codes:
// ParseError -> 1, DomainError / ValidationError -> 2, ResourceError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, rational literals, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (negative x, c <= 0, d < 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Well-formed but mathematically inconsistent data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (enumeration size, degree bound) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkd
