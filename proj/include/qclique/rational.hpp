#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qclique {

/// Arbitrary-precision rational used wherever a value must be compared
/// exactly (densities, model coefficients, assignment values).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-0.25", "1e-9", "2.5E+3" or "3/7" into an exact rational.
/// Returns nullopt on anything else (including "inf" and "nan").
std::optional<Rational> parse_rational(std::string_view text);

/// Decimal rendering of a rational.
struct DecimalText {
  std::string text;
  bool exact = true;  // false when the expansion does not terminate
};

/// Shortest exact decimal when the denominator has only factors 2 and 5,
/// otherwise a 17-significant-digit rounding with `exact == false`.
DecimalText format_decimal(const Rational& value);

/// "p/q" (or "p" when integral).
std::string format_fraction(const Rational& value);

double to_double(const Rational& value);

}  // namespace qclique
