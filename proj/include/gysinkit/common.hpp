#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gysinkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or data invariant.
class MalformedInput : public Error {
public:
  using Error::Error;
};

/// Input is well formed but outside the supported dimension or mode.
class Unsupported : public Error {
public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q" or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

} // namespace gysinkit
