#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and rationals.
 *
 * All coordinate arithmetic in this library is exact. Rationals are kept in
 * canonical reduced form (coprime numerator/denominator, denominator > 0);
 * GMP maintains that invariant through every operation. Floating point never
 * enters a predicate; doubles appear only in display formatting.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "ipset/errors.hpp"

namespace ipset {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidParameter on zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidParameter("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "num" or "num/den" with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "num" when den == 1, else "num/den".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Fixed-point decimal rendering used by reports and CSV (no exactness claim).
std::string format_decimal(double value, int digits = 9);

} // namespace ipset
