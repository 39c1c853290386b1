#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace brokentoric::exactla {

// GMP keeps every mpq_class canonical (gcd 1, positive denominator) after
// arithmetic; values built from a raw numerator/denominator pair must go
// through make_rational or parse_rational.
using Rational = mpq_class;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

/// Parses "p", "-p" or "p/q" with decimal integers of any length.
/// Throws PreconditionError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace brokentoric::exactla
