#include "ipset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ipset/numtheory.hpp"

namespace ipset {

bool theorem_bound_holds(const Integer& n, const Integer& p) {
    // p >= (n/5)^(5/4)  <=>  5^5 p^4 >= n^5
    const Integer p2 = p * p;
    const Integer n2 = n * n;
    return 3125 * p2 * p2 >= n2 * n2 * n;
}

std::vector<BoundReport> bound_table(int n_from, int n_to, const BoundParams& params) {
    if (n_from < 3 || n_from > n_to) {
        throw InvalidParameter("bound_table: need 3 <= n_from <= n_to");
    }
    if (params.delta <= 0 || params.epsilon <= 0) {
        throw InvalidParameter("bound_table: delta and epsilon must be positive");
    }
    const double collinear_log = params.collinear_log2
                                     ? std::log2(1.0 + params.epsilon)
                                     : std::log(2.0 * (1.0 + params.epsilon));

    std::vector<BoundReport> table;
    table.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (int n = n_from; n <= n_to; ++n) {
        const double nd = static_cast<double>(n);
        const double loglog = std::log(std::log(nd));
        BoundReport r;
        r.n = n;
        r.theorem_bound = std::pow(nd / 5.0, 1.25);
        r.linear_bound = 5.0 * nd / 11.0;
        r.min_dist_bound = std::cbrt(nd);
        r.remark_bound = params.c3 * std::pow(nd, 7.0 / 6.0);
        r.upper_bound = std::pow(nd, params.c2 * loglog);
        r.collinear_bound = std::pow(nd, params.delta / (4.0 * collinear_log) * loglog);
        table.push_back(r);
    }
    return table;
}

bool min_height_check(const Integer& a, const Integer& b, const Integer& c) {
    if (a < 1 || a > b || b > c) {
        throw InvalidParameter("min_height_check: need 1 <= a <= b <= c");
    }
    if (a + b <= c) throw DegenerateTriangle("min_height_check: degenerate triangle");
    // 2A/c >= sqrt(a - 1/4)  <=>  16 A^2 >= c^2 (4a - 1), Heron on the left.
    const Integer heron16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
    return heron16 >= c * c * (4 * a - 1);
}

bool cross_membership(const Point& n, const Point& m1, const Point& m2,
                      const Characteristic& k) {
    if (m1 == m2) throw DegenerateInput("cross_membership: coincident pair");
    return collinear(n, m1, m2) || dist_sq(n, m1, k) == dist_sq(n, m2, k);
}

namespace {

void require_semi_general(const PointSet& s, const char* who) {
    if (s.n() < 4) {
        throw PreconditionViolated(std::string(who) + ": requires n >= 4");
    }
    if (classify_position(s) == PositionClass::Any) {
        throw PreconditionViolated(std::string(who) + ": requires semi-general position");
    }
}

} // namespace

bool cube_root_min_distance_holds(const PointSet& s) {
    const Integer m = min_distance(s);
    return m * m * m >= s.n();
}

bool hyperbola_count_check(const PointSet& s) {
    require_semi_general(s, "hyperbola_count_check");
    const auto rep = extremal_distances(s);
    // Unit distances cannot occur here: a distance-one set has n-1 collinear
    // points, impossible in semi-general position with n >= 4.
    if (rep.closest_distance < 2 || rep.second_min < 2) return false;
    return Integer(s.n()) <= 4 * rep.closest_distance * rep.second_min;
}

DistanceOneReport distance_one_structure_check(const PointSet& s) {
    const auto dm = distance_matrix(s);
    const int n = s.n();

    DistanceOneReport rep;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dm[i][j] == 1) rep.unit_pairs.emplace_back(i, j);
        }
    }
    if (rep.unit_pairs.empty()) {
        throw NoUnitDistance("distance_one_structure_check: no pair at distance 1");
    }

    rep.conforming = true;
    for (const auto& [u, v] : rep.unit_pairs) {
        std::vector<int> on_line;
        std::vector<int> off_line;
        for (int i = 0; i < n; ++i) {
            if (collinear(s.points[u], s.points[v], s.points[i])) {
                on_line.push_back(i);
            } else {
                off_line.push_back(i);
            }
        }
        const std::string pair_name =
            "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (static_cast<int>(on_line.size()) != n - 1 || off_line.size() != 1) {
            rep.conforming = false;
            rep.violations.push_back("unit pair " + pair_name + ": expected n-1 points on its line, found " +
                                     std::to_string(on_line.size()));
        } else if (dist_sq(s.points[off_line[0]], s.points[u], s.k) !=
                   dist_sq(s.points[off_line[0]], s.points[v], s.k)) {
            rep.conforming = false;
            rep.violations.push_back("unit pair " + pair_name +
                                     ": off-line point is not on the perpendicular bisector");
        }
        if (rep.line_points.empty()) {
            rep.line_points = on_line;
            rep.off_point = off_line.size() == 1 ? off_line[0] : -1;
        }
    }
    return rep;
}

PointSet canonical_frame(const PointSet& s) {
    const auto dm = distance_matrix(s);
    const int n = s.n();

    Integer p(0);
    std::pair<int, int> axis{-1, -1};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dm[i][j] > p) {
                p = dm[i][j];
                axis = {i, j};
            }
        }
    }
    const auto [i0, j0] = axis;

    // Each point is fixed by its distances to the axis pair plus the side of
    // the axis line it lies on; sides are preserved from the original frame,
    // so the rebuilt set is congruent to s.
    PointSet out;
    std::vector<Rational> y_squares(n);
    bool k_set = false;
    for (int l = 0; l < n; ++l) {
        const Integer& a = dm[l][i0];
        const Integer& b = dm[l][j0];
        const Rational x = make_rational(p * p + a * a - b * b, 2 * p);
        const Rational y_sq = Rational(a * a) - x * x;
        y_squares[l] = y_sq;
        if (y_sq > 0 && !k_set) {
            out.k = squarefree_decompose(y_sq).k;
            k_set = true;
        }
        out.points.push_back({x, Rational(0)});
    }
    if (!k_set) {
        throw PreconditionViolated("canonical_frame: all points collinear");
    }
    for (int l = 0; l < n; ++l) {
        if (y_squares[l] == 0) continue;
        auto dec = squarefree_decompose(y_squares[l]);
        if (dec.k != out.k) {
            throw Error("canonical_frame: inconsistent characteristics in one set");
        }
        const Rational side = (s.points[j0].x - s.points[i0].x) * (s.points[l].r - s.points[i0].r) -
                              (s.points[j0].r - s.points[i0].r) * (s.points[l].x - s.points[i0].x);
        Rational r = dec.root;
        if (side < 0) r = -r;
        out.points[l].r = r;
    }
    return out;
}

bool square_container_check(const PointSet& s) {
    const PointSet cf = canonical_frame(s);
    const Rational p(diameter(s));

    Rational min_x = cf.points[0].x, max_x = cf.points[0].x;
    Rational min_r = cf.points[0].r, max_r = cf.points[0].r;
    for (const Point& pt : cf.points) {
        min_x = std::min(min_x, pt.x);
        max_x = std::max(max_x, pt.x);
        min_r = std::min(min_r, pt.r);
        max_r = std::max(max_r, pt.r);
    }
    const Rational dr = max_r - min_r;
    // Width check is exact: k * (delta r)^2 <= p^2 avoids sqrt(k).
    return max_x - min_x <= p && Rational(cf.k) * dr * dr <= p * p;
}

namespace {

std::int64_t least_strip_count(const Integer& p) {
    // least q with q^5 >= 32 p^4, i.e. the integer in [2p^(4/5), 2p^(4/5)+1)
    const Integer p2 = p * p;
    const Integer target = 32 * p2 * p2;
    const double guess = 2.0 * std::pow(to_double(Rational(p)), 0.8);
    Integer q(std::max<long>(1, static_cast<long>(guess) - 2));
    auto fifth = [](const Integer& v) -> Integer { return v * v * v * v * v; };
    while (fifth(q) < target) ++q;
    while (q > 1 && fifth(q - 1) >= target) --q;
    return q.get_si();
}

std::vector<std::pair<std::int64_t, int>> strip_histogram(const PointSet& cf,
                                                          const Integer& p,
                                                          std::int64_t q, int skip) {
    std::map<std::int64_t, int> counts;
    for (int l = 0; l < cf.n(); ++l) {
        if (l == skip) continue;
        // strip index floor(x q / p), the closing strip owning x = p
        const Rational& x = cf.points[l].x;
        const Integer num = x.get_num() * q;
        const Integer den = x.get_den() * p;
        Integer idx;
        mpz_fdiv_q(idx.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (idx == q) idx = q - 1;
        counts[idx.get_si()] += 1;
    }
    return {counts.begin(), counts.end()};
}

} // namespace

StripReport strip_partition_check(const PointSet& s) {
    require_semi_general(s, "strip_partition_check");
    const auto rep = extremal_distances(s);
    const Integer& p = rep.diameter;
    const Integer m5 = rep.second_min * rep.second_min * rep.second_min *
                       rep.second_min * rep.second_min;
    if (m5 <= p * p) {
        throw PreconditionViolated("strip_partition_check: hyperbola branch applies (m^5 <= p^2)");
    }

    const PointSet cf = canonical_frame(s);
    StripReport out;
    out.q = least_strip_count(p);
    out.strip_counts = strip_histogram(cf, p, out.q, rep.closest_pair.first);
    out.pass = std::all_of(out.strip_counts.begin(), out.strip_counts.end(),
                           [](const auto& sc) { return sc.second <= 2; });
    return out;
}

ProofTrace replay_theorem_proof(const PointSet& s) {
    require_semi_general(s, "replay_theorem_proof");

    ProofTrace trace;
    trace.report = extremal_distances(s);
    trace.p = trace.report.diameter;
    const Integer n(s.n());
    const Integer& p = trace.p;
    const Integer& m = trace.report.second_min;
    const Integer& c = trace.report.closest_distance;
    const Integer p4 = p * p * p * p;
    const Integer n5 = n * n * n * n * n;
    const Integer m5 = m * m * m * m * m;

    if (m5 <= p * p) {
        trace.branch = ProofBranch::Hyperbola;
        trace.inequalities.push_back(
            {"branch m^5 <= p^2", m5, "<=", p * p, m5 <= p * p});
        const Integer hyperbola_cap = 4 * c * m;
        trace.inequalities.push_back(
            {"n <= 4 |M1M2| m", n, "<=", hyperbola_cap, n <= hyperbola_cap});
        trace.inequalities.push_back(
            {"n^5 <= 4^5 p^4", n5, "<=", 1024 * p4, n5 <= 1024 * p4});
    } else {
        trace.branch = ProofBranch::Strip;
        trace.inequalities.push_back({"branch m^5 > p^2", m5, ">", p * p, m5 > p * p});
        const StripReport strips = strip_partition_check(s);
        trace.q = strips.q;
        trace.strip_counts = strips.strip_counts;
        int worst = 0;
        for (const auto& sc : strips.strip_counts) worst = std::max(worst, sc.second);
        trace.inequalities.push_back(
            {"strip occupancy <= 2", Integer(worst), "<=", Integer(2), strips.pass});
        trace.inequalities.push_back(
            {"n^5 <= 5^5 p^4", n5, "<=", 3125 * p4, n5 <= 3125 * p4});
    }

    trace.pass = std::all_of(trace.inequalities.begin(), trace.inequalities.end(),
                             [](const InequalityCheck& c2) { return c2.pass; });
    return trace;
}

} // namespace ipset
