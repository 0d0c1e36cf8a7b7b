#pragma once

/**
 * @file constructions.hpp
 * @brief Known integral point set families: facher and circular sets.
 */

#include <vector>

#include "ipset/geometry.hpp"

namespace ipset {

/// n-1 collinear points plus one apex off the line at height h.
/// Legs are the x with x^2 + h^2 a perfect square, found by factoring
/// h^2 = e * f with e <= f and e, f of equal parity.
struct FacherSpec {
    Integer h;
    std::vector<Integer> legs; ///< ascending, may start with 0
};

FacherSpec facher_spec(const Integer& h);

/// The facher set with apex (0, h): apex first, on-line points (+-leg, 0)
/// sorted by x. Always validates; k = 1.
PointSet facher(const Integer& h);

/// One rational point on the unit circle, parameterized as a half-angle:
/// the chord between angles i and j is 2R * |sin_i cos_j - cos_i sin_j|.
struct CircularAngle {
    Rational sin; ///< sin of the half-angle
    Rational cos; ///< cos of the half-angle; sin^2 + cos^2 = 1
};

struct CircularSpec {
    std::vector<CircularAngle> angles;
    Integer scale; ///< 2R, the common chord denominator squared away
};

CircularSpec circular_spec(int n);

/// An n-point integral set on one circle, semi-general by construction
/// (a circle meets a line in at most two points); k = 1. Diameter is not
/// claimed minimal. Throws ConstructionBudgetExceeded when the Pythagorean
/// angle pool runs out before n distinct points are found.
PointSet circular(int n);

} // namespace ipset
