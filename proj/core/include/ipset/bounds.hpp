#pragma once

/**
 * @file bounds.hpp
 * @brief Bound-formula evaluators, lemma checks, and proof replay.
 *
 * Every accept/reject decision is an exact integer inequality with the
 * radicals cleared:
 *
 *   m <= p^(2/5)        <=>  m^5 <= p^2
 *   n <= 4 p^(4/5)      <=>  n^5 <= 4^5 p^4
 *   n <= 5 p^(4/5)      <=>  n^5 <= 5^5 p^4
 *   p >= (n/5)^(5/4)    <=>  5^5 p^4 >= n^5
 *   q in [2p^(4/5), 2p^(4/5)+1)  <=>  q minimal with q^5 >= 32 p^4
 *
 * Real-valued bound columns exist only for display and carry a documented
 * 1e-9 relative tolerance.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ipset/geometry.hpp"

namespace ipset {

struct BoundParams {
    double c2 = 1.0;      ///< upper bound n^(c2 log log n)
    double c3 = 1.0;      ///< remark bound c3 * n^(7/6)
    double delta = 0.5;   ///< collinear-points bound, requires > 0
    double epsilon = 0.5; ///< collinear-points bound, requires > 0
    /// Collinear exponent denominator: false -> 4*log(2*(1+eps)) (default),
    /// true -> 4*log2(1+eps). The source formula is ambiguous between the two.
    bool collinear_log2 = false;
};

struct BoundReport {
    int n = 0;
    double theorem_bound = 0;   ///< (n/5)^(5/4)
    double linear_bound = 0;    ///< 5n/11
    double min_dist_bound = 0;  ///< n^(1/3)
    double remark_bound = 0;    ///< c3 * n^(7/6)
    double upper_bound = 0;     ///< n^(c2 log log n)
    double collinear_bound = 0; ///< n^(delta/(4 log 2(1+eps)) * log log n)
};

/// Exact check 5^5 * p^4 >= n^5, the cleared form of p >= (n/5)^(5/4).
bool theorem_bound_holds(const Integer& n, const Integer& p);

/// One report per n in [n_from, n_to]. Throws InvalidParameter for a bad
/// range or delta/epsilon <= 0.
std::vector<BoundReport> bound_table(int n_from, int n_to, const BoundParams& params = {});

/// Exact check 16 A^2 >= c^2 (4a - 1) via Heron: the minimal height 2A/c of
/// an integer triangle a <= b <= c is at least sqrt(a - 1/4).
/// Throws DegenerateTriangle unless a <= b <= c satisfy the strict triangle
/// inequality, InvalidParameter unless 1 <= a <= b <= c.
bool min_height_check(const Integer& a, const Integer& b, const Integer& c);

/// True iff N lies on the cross of (M1, M2): the line through them or the
/// perpendicular bisector of the segment.
bool cross_membership(const Point& n, const Point& m1, const Point& m2,
                      const Characteristic& k);

/// Exact check (min distance)^3 >= n, the cleared form of the cube-root
/// minimum-distance bound for semi-general sets.
bool cube_root_min_distance_holds(const PointSet& s);

/// Exact check n <= 4 * |M1 M2| * m with the pairs picked by
/// extremal_distances, plus |M1 M2| >= 2 and m >= 2 (unit distances are
/// impossible in semi-general position for n >= 4). Always true on valid
/// input; false flags an implementation fault.
/// Throws PreconditionViolated for n < 4 or a non-semi-general set.
bool hyperbola_count_check(const PointSet& s);

struct DistanceOneReport {
    std::vector<std::pair<int, int>> unit_pairs;
    std::vector<int> line_points; ///< indices on the main line (first unit pair)
    int off_point = -1;           ///< the single point off that line
    bool conforming = false;
    std::vector<std::string> violations;
};

/// Verifies the structure forced by a unit distance: n-1 points collinear
/// (including every unit pair) and one point off the line on the
/// perpendicular bisector of each unit segment.
/// Throws NoUnitDistance when no pair is at distance one.
DistanceOneReport distance_one_structure_check(const PointSet& s);

/// Rebuilds s in the canonical frame: the lexicographically least
/// diameter-realizing pair goes to (0,0), (p,0) and each point is recovered
/// from its two distances, r signs consistent with one original side.
PointSet canonical_frame(const PointSet& s);

/// Exact check that the canonical-frame bounding box fits in a p x p square:
/// max x - min x <= p and k * (max r - min r)^2 <= p^2. Always true for
/// valid sets.
bool square_container_check(const PointSet& s);

struct StripReport {
    std::int64_t q = 0; ///< least q with q^5 >= 32 p^4
    /// Occupied strips only, ascending (strip index, point count); strips not
    /// listed hold zero points. Strip i covers [i*p/q, (i+1)*p/q), the last
    /// one closed.
    std::vector<std::pair<std::int64_t, int>> strip_counts;
    bool pass = false; ///< every strip holds at most two points of M \ {M1}
};

/// Partitions the canonical-frame square into q vertical strips and counts
/// the points of M \ {M1} per strip, exact rational comparisons throughout.
/// Throws PreconditionViolated unless the set is semi-general with n >= 4
/// and the strip branch applies (m^5 > p^2).
StripReport strip_partition_check(const PointSet& s);

enum class ProofBranch { Hyperbola, Strip };

struct InequalityCheck {
    std::string name;
    Integer lhs;
    std::string relation; ///< "<=" or ">="
    Integer rhs;
    bool pass = false;
};

struct ProofTrace {
    Integer p;
    ExtremalReport report;
    ProofBranch branch = ProofBranch::Strip;
    std::int64_t q = 0;                                       ///< strip branch only
    std::vector<std::pair<std::int64_t, int>> strip_counts;   ///< strip branch only
    std::vector<InequalityCheck> inequalities;
    bool pass = false;
};

/// Replays the diameter lower-bound argument on a concrete set: picks the
/// extremal pairs, takes the hyperbola branch when m^5 <= p^2 (checking
/// n <= 4 |M1 M2| m and n^5 <= 4^5 p^4) and the strip branch otherwise
/// (strip counts plus n^5 <= 5^5 p^4). Every inequality is recorded with its
/// exact integer operands; all must pass on valid input.
/// Throws PreconditionViolated for n < 4 or a non-semi-general set.
ProofTrace replay_theorem_proof(const PointSet& s);

} // namespace ipset
