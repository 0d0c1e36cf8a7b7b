#include "ipset/enumeration.hpp"

#include <algorithm>
#include <set>

namespace ipset {

std::size_t CandidatePool::off_line_count() const {
    std::size_t total = 0;
    for (const auto& [k, list] : by_characteristic) total += list.size();
    return total;
}

CandidatePool candidate_points(std::int64_t d, long trial_bound) {
    if (d < 1) throw InvalidParameter("candidate_points: d must be >= 1");

    CandidatePool pool;
    pool.d = d;
    const Integer dz(static_cast<long>(d));

    for (Integer a = 1; a <= dz; ++a) {
        for (Integer b = 1; b <= dz; ++b) {
            const Rational x = make_rational(dz * dz + a * a - b * b, 2 * dz);
            const Rational y_sq = Rational(a * a) - x * x;
            if (y_sq < 0) continue; // triangle inequality fails
            if (y_sq == 0) {
                // Degenerate: the candidate sits on the base line, 0 < x < d.
                if (x > 0 && x < Rational(dz)) {
                    pool.on_line.push_back(
                        {Point{x, Rational(0)}, a, b, Integer(1), true});
                }
                continue;
            }
            auto dec = squarefree_decompose(y_sq, trial_bound);
            pool.by_characteristic[dec.k].push_back(
                {Point{x, dec.root}, a, b, dec.k, false});
            pool.by_characteristic[dec.k].push_back(
                {Point{x, -dec.root}, a, b, dec.k, false});
        }
    }

    auto by_point = [](const Candidate& lhs, const Candidate& rhs) {
        return point_less(lhs.point, rhs.point);
    };
    for (auto& [k, list] : pool.by_characteristic) {
        std::sort(list.begin(), list.end(), by_point);
        // Distinct (a,b) cells always yield distinct points, (a,b) being
        // recoverable from the point; a collision means a broken invariant.
        for (std::size_t i = 1; i < list.size(); ++i) {
            if (list[i].point == list[i - 1].point) {
                throw Error("candidate_points: duplicate candidate in pool");
            }
        }
    }
    std::sort(pool.on_line.begin(), pool.on_line.end(), by_point);
    return pool;
}

std::string canonical_form(const PointSet& s) {
    std::vector<Point> pts = s.points;
    std::sort(pts.begin(), pts.end(), point_less);
    std::string out = "k=" + s.k.get_str() + "|";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) out += ';';
        out += to_string(pts[i].x);
        out += ',';
        out += to_string(pts[i].r);
    }
    return out;
}

PointSet canonicalize(const PointSet& s) {
    const Rational d(diameter(s));

    PointSet best;
    std::string best_form;
    for (int mirror_x = 0; mirror_x < 2; ++mirror_x) {
        for (int flip_r = 0; flip_r < 2; ++flip_r) {
            PointSet image;
            image.k = s.k;
            image.points.reserve(s.points.size());
            for (const Point& p : s.points) {
                Rational x = mirror_x ? d - p.x : p.x;
                Rational r = flip_r ? -p.r : p.r;
                image.points.push_back({std::move(x), std::move(r)});
            }
            std::sort(image.points.begin(), image.points.end(), point_less);
            std::string form = canonical_form(image);
            if (best_form.empty() || form < best_form) {
                best_form = std::move(form);
                best = std::move(image);
            }
        }
    }
    return best;
}

} // namespace ipset
