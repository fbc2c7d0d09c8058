#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace superbott {

// Expression templates off: `auto` and deduced lambda returns must own their value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Multiplicity of an irreducible inside a (possibly virtual) character.
using Mult = std::int64_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain: a theorem hypothesis fails,
/// ranks disagree, a bound is violated. The CLI maps these to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Textual input could not be parsed. The CLI maps these to exit code 1.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An expansion would exceed the configured term budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace superbott
