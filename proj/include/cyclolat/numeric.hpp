#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclolat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, file or configuration input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "a", "-a" or "a/b" into a canonical rational. Whitespace around the
/// token is ignored.
Rational parse_rational(std::string_view text);

/// Canonical "a/b" form; integers are written without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Comma-separated list of exact rationals, e.g. "1/23, 0, -3".
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(const std::vector<Rational>& values);

/// Representative of q modulo m in [0, m).
Rational mod_positive(const Rational& q, const Integer& m);

Integer floor(const Rational& q);
bool is_integer(const Rational& q);

/// Returns a sorted copy; mpq_class has no std::hash so multisets are kept as
/// sorted vectors.
std::vector<Rational> sorted(std::vector<Rational> values);

/// Decimal approximation with `digits` fractional digits, truncated toward
/// zero. For human-readable reports only.
std::string to_decimal(const Rational& q, int digits);

bool fits_int64(const Integer& z);

}  // namespace cyclolat
