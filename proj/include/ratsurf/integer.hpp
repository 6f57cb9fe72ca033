#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratsurf {

/// Arbitrary-precision signed integer used for every count in the library.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an input lies outside the verified scope of an operation.
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an enumeration or truncation exceeds its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a class or surface string does not parse.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Narrow to int64, throwing CapExceeded if the value does not fit.
inline std::int64_t to_int64(const Integer& v, const char* what) {
  if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN)) {
    throw CapExceeded(std::string(what) + ": value " + v.str() + " out of range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace ratsurf
