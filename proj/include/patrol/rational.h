#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace patrol {

/// Exact rational number. Every position, idleness, and event time in the
/// library is one of these; speeds are in {-1, 0, +1} so nothing irrational
/// ever arises from the dynamics.
using Rational = mpq_class;

/// Parses "3", "-2", "0.125", ".5", "5/3" or "-7/12" exactly.
/// Throws Error{ErrorKind::ParseError} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Shortest round-trip decimal rendering of the nearest double.
std::string to_decimal(const Rational& q);

double to_double(const Rational& q);

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rabs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

/// Least common multiple of two positive rationals: the smallest positive
/// rational that is an integer multiple of both.
Rational rational_lcm(const Rational& a, const Rational& b);

/// floor(a / b) for b > 0.
mpz_class floor_div(const Rational& a, const Rational& b);

}  // namespace patrol
