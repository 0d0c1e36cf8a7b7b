#pragma once

/**
 * @file geometry.hpp
 * @brief Exact plane geometry over one quadratic surd.
 *
 * A point is stored as (x, r) and means the plane point (x, r*sqrt(k)) for a
 * squarefree characteristic k shared by the whole set. Squared distances,
 * collinearity and concyclicity then reduce to exact rational arithmetic:
 * the sqrt(k) factor cancels out of every predicate.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipset/rational.hpp"

namespace ipset {

/// Squarefree positive integer k; k = 1 encodes purely rational coordinates.
using Characteristic = Integer;

struct Point {
    Rational x; ///< plane abscissa
    Rational r; ///< surd coefficient; plane ordinate is r*sqrt(k)

    bool operator==(const Point& other) const {
        return x == other.x && r == other.r;
    }
};

/// Exact (x, r) ordering used for deterministic point sorting.
bool point_less(const Point& a, const Point& b);

struct PointSet {
    Characteristic k{1};
    std::vector<Point> points;

    int n() const { return static_cast<int>(points.size()); }
};

enum class PositionClass {
    Any,         ///< collinear triples permitted
    SemiGeneral, ///< no three points collinear
    General,     ///< semi-general and no four points concyclic
};

std::string to_string(PositionClass pc);
std::optional<PositionClass> position_from_string(std::string_view text);

/// Extremal pairs chosen the way the diameter argument selects them:
/// the globally closest pair (M1, M2), then the closest pair once M1 is
/// removed. Ties break to the lexicographically smallest index pair.
struct ExtremalReport {
    Integer diameter;                 ///< p = max pairwise distance
    std::pair<int, int> closest_pair; ///< (M1, M2), |M1 M2| = global min
    Integer closest_distance;
    std::pair<int, int> second_pair;  ///< (M3, M4) within M \ {M1}
    Integer second_min;               ///< m = |M3 M4|
};

struct ValidationReport {
    bool valid = false;
    bool all_collinear = false;
    std::vector<std::pair<int, int>> non_integral_pairs;
    std::vector<std::pair<int, int>> duplicate_points;
    PositionClass position = PositionClass::Any;
};

/// Squared Euclidean distance (P.x-Q.x)^2 + k*(P.r-Q.r)^2, exact.
Rational dist_sq(const Point& p, const Point& q, const Characteristic& k);

/// The distance |PQ| when it is a positive integer, empty otherwise.
std::optional<Integer> integral_distance(const Point& p, const Point& q,
                                         const Characteristic& k);

/// Exact collinearity of three points; sqrt(k) cancels from the determinant.
bool collinear(const Point& p1, const Point& p2, const Point& p3);

/// Exact concyclicity of four distinct points sharing characteristic k.
/// Four collinear points lie on no circle and yield false.
/// Throws DegenerateInput if any two points coincide.
bool concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4,
               const Characteristic& k);

/// Full integer distance matrix of a validated set.
/// Throws PreconditionViolated on a non-integral or zero distance.
std::vector<std::vector<Integer>> distance_matrix(const PointSet& s);

Integer diameter(const PointSet& s);
Integer min_distance(const PointSet& s);

/// Extremal pair selection; requires a validated set with n >= 4.
ExtremalReport extremal_distances(const PointSet& s);

/// Strongest position class that holds, by exhaustive triple/quadruple checks.
PositionClass classify_position(const PointSet& s);

/// Integrality and non-collinearity report; never throws.
ValidationReport validate(const PointSet& s);

} // namespace ipset
