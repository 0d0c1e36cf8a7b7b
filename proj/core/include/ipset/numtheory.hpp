#pragma once

/**
 * @file numtheory.hpp
 * @brief Integer square roots and squarefree decomposition of rationals.
 *
 * Every positive rational q has a unique normal form q = r^2 * k with k a
 * squarefree positive integer; that k is the "characteristic" shared by all
 * ordinates of an integral point set. Factoring uses trial division up to a
 * configurable bound and certifies the residual cofactor, so desk-scale
 * inputs decompose exactly and oversized ones fail loudly instead of
 * silently producing a wrong k.
 */

#include <optional>

#include "ipset/rational.hpp"

namespace ipset {

inline constexpr long kDefaultTrialDivisionBound = 1'000'000;

/// Exact integer square root test: returns s with s*s == v, or empty.
/// Negative input yields empty.
std::optional<Integer> is_perfect_square(const Integer& v);

struct SquarefreeDecomposition {
    Rational root; ///< r in q = r^2 * k
    Integer k;     ///< squarefree positive integer
};

/// Decomposes q > 0 as r^2 * k with k squarefree.
/// Throws InvalidParameter for q <= 0 and FactorizationLimitExceeded when a
/// residual cofactor cannot be certified within the trial-division bound.
SquarefreeDecomposition squarefree_decompose(const Rational& q,
                                             long trial_bound = kDefaultTrialDivisionBound);

/// Trial-division squarefreeness test for desk-scale integers.
/// Throws FactorizationLimitExceeded when the residual defeats the bound.
bool is_squarefree(const Integer& v, long trial_bound = kDefaultTrialDivisionBound);

} // namespace ipset
