#pragma once

/**
 * @file enumeration.hpp
 * @brief Finite candidate universe for a fixed target diameter.
 *
 * With the base pair fixed at O = (0,0) and A = (d,0), every plane point at
 * integer distances a <= d from O and b <= d from A is determined by (a, b):
 * x = (d^2 + a^2 - b^2) / (2d) and y^2 = a^2 - x^2. The pool of all such
 * points, grouped by characteristic, is the whole search universe for sets
 * of diameter d — finiteness is what makes exhaustive search possible.
 */

#include <cstdint>
#include <map>
#include <vector>

#include "ipset/geometry.hpp"
#include "ipset/numtheory.hpp"

namespace ipset {

struct Candidate {
    Point point;
    Integer a;        ///< integer distance to O = (0,0)
    Integer b;        ///< integer distance to A = (d,0)
    Characteristic k; ///< squarefree part of y^2 (1 for on-line candidates)
    bool on_line = false;
};

struct CandidatePool {
    std::int64_t d = 0;
    /// Off-line candidates grouped by characteristic; both mirror signs
    /// (x, r) and (x, -r) are present. Lists sorted by (x, r).
    std::map<Characteristic, std::vector<Candidate>> by_characteristic;
    /// On-line candidates 0 < x < d with integer x and d - x.
    std::vector<Candidate> on_line;

    std::size_t off_line_count() const;
};

/// Enumerates the full candidate pool for diameter d >= 1.
/// Throws FactorizationLimitExceeded from squarefree_decompose on
/// out-of-scale inputs.
CandidatePool candidate_points(std::int64_t d,
                               long trial_bound = kDefaultTrialDivisionBound);

/// Compact one-line text form "k=<k>|x,r;x,r;..." with points sorted by
/// (x, r); equal strings mean equal sets. Used for deduplication and as the
/// total order behind canonicalization.
std::string canonical_form(const PointSet& s);

/// Representative of the orbit of s under the frame symmetries x -> d - x
/// and r -> -r (d = diameter of s) that minimizes canonical_form.
/// Idempotent; congruent mirror images collapse to one representative.
PointSet canonicalize(const PointSet& s);

} // namespace ipset
