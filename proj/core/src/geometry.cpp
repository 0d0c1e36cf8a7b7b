#include "ipset/geometry.hpp"

#include <algorithm>

#include "ipset/numtheory.hpp"

namespace ipset {

bool point_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return cmp(a.r, b.r) < 0;
}

std::string to_string(PositionClass pc) {
    switch (pc) {
        case PositionClass::Any: return "any";
        case PositionClass::SemiGeneral: return "semi-general";
        case PositionClass::General: return "general";
    }
    return "any";
}

std::optional<PositionClass> position_from_string(std::string_view text) {
    if (text == "any") return PositionClass::Any;
    if (text == "semi" || text == "semi-general") return PositionClass::SemiGeneral;
    if (text == "general") return PositionClass::General;
    return std::nullopt;
}

Rational dist_sq(const Point& p, const Point& q, const Characteristic& k) {
    const Rational dx = p.x - q.x;
    const Rational dr = p.r - q.r;
    return dx * dx + Rational(k) * dr * dr;
}

std::optional<Integer> integral_distance(const Point& p, const Point& q,
                                         const Characteristic& k) {
    const Rational d2 = dist_sq(p, q, k);
    if (!is_integer(d2)) return std::nullopt;
    auto root = is_perfect_square(d2.get_num());
    if (!root || *root == 0) return std::nullopt;
    return root;
}

bool collinear(const Point& p1, const Point& p2, const Point& p3) {
    // sqrt(k) scales the ordinates uniformly, so it cancels from the area form.
    return (p2.x - p1.x) * (p3.r - p1.r) == (p3.x - p1.x) * (p2.r - p1.r);
}

namespace {

Rational det3(const Rational m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

bool concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4,
               const Characteristic& k) {
    const Point pts[4] = {p1, p2, p3, p4};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (pts[i] == pts[j]) throw DegenerateInput("concyclic: coincident points");
        }
    }

    // Circle determinant with rows (x^2 + k r^2, x, r, 1); the sqrt(k) factor
    // of the ordinate column is pulled out, leaving a rational determinant.
    // Subtracting row 0 from the rest reduces it to a 3x3 minor.
    const Rational kq(k);
    Rational row0[3];
    Rational m[3][3];
    for (int i = 0; i < 4; ++i) {
        const Rational w = pts[i].x * pts[i].x + kq * pts[i].r * pts[i].r;
        if (i == 0) {
            row0[0] = w;
            row0[1] = pts[i].x;
            row0[2] = pts[i].r;
        } else {
            m[i - 1][0] = w - row0[0];
            m[i - 1][1] = pts[i].x - row0[1];
            m[i - 1][2] = pts[i].r - row0[2];
        }
    }
    if (det3(m) != 0) return false;
    // Determinant zero also covers four collinear points, which lie on no circle.
    return !(collinear(p1, p2, p3) && collinear(p1, p2, p4));
}

std::vector<std::vector<Integer>> distance_matrix(const PointSet& s) {
    const int n = s.n();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto d = integral_distance(s.points[i], s.points[j], s.k);
            if (!d) {
                throw PreconditionViolated("distance_matrix: pair (" + std::to_string(i) +
                                           "," + std::to_string(j) +
                                           ") is not at a positive integer distance");
            }
            m[i][j] = m[j][i] = *d;
        }
    }
    return m;
}

Integer diameter(const PointSet& s) {
    const auto m = distance_matrix(s);
    Integer best(0);
    for (int i = 0; i < s.n(); ++i) {
        for (int j = i + 1; j < s.n(); ++j) best = std::max(best, m[i][j]);
    }
    return best;
}

Integer min_distance(const PointSet& s) {
    const auto m = distance_matrix(s);
    Integer best(0);
    for (int i = 0; i < s.n(); ++i) {
        for (int j = i + 1; j < s.n(); ++j) {
            if (best == 0 || m[i][j] < best) best = m[i][j];
        }
    }
    return best;
}

ExtremalReport extremal_distances(const PointSet& s) {
    const int n = s.n();
    if (n < 4) throw PreconditionViolated("extremal_distances: requires n >= 4");
    const auto m = distance_matrix(s);

    ExtremalReport rep;
    rep.diameter = 0;
    bool have_min = false;
    // Lexicographic (i, j) scan with strict improvement keeps the smallest
    // index pair among ties.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rep.diameter = std::max(rep.diameter, m[i][j]);
            if (!have_min || m[i][j] < rep.closest_distance) {
                have_min = true;
                rep.closest_distance = m[i][j];
                rep.closest_pair = {i, j};
            }
        }
    }

    const int m1 = rep.closest_pair.first;
    bool have_second = false;
    for (int i = 0; i < n; ++i) {
        if (i == m1) continue;
        for (int j = i + 1; j < n; ++j) {
            if (j == m1) continue;
            if (!have_second || m[i][j] < rep.second_min) {
                have_second = true;
                rep.second_min = m[i][j];
                rep.second_pair = {i, j};
            }
        }
    }
    return rep;
}

PositionClass classify_position(const PointSet& s) {
    const int n = s.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                if (collinear(s.points[i], s.points[j], s.points[l])) {
                    return PositionClass::Any;
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                for (int h = l + 1; h < n; ++h) {
                    if (concyclic(s.points[i], s.points[j], s.points[l], s.points[h],
                                  s.k)) {
                        return PositionClass::SemiGeneral;
                    }
                }
            }
        }
    }
    return PositionClass::General;
}

ValidationReport validate(const PointSet& s) {
    ValidationReport rep;
    const int n = s.n();

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (s.points[i] == s.points[j]) rep.duplicate_points.emplace_back(i, j);
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!integral_distance(s.points[i], s.points[j], s.k)) {
                rep.non_integral_pairs.emplace_back(i, j);
            }
        }
    }

    if (n <= 2) {
        rep.all_collinear = true;
    } else {
        rep.all_collinear = true;
        // Any two distinct points serve as the base line.
        int base2 = -1;
        for (int i = 1; i < n; ++i) {
            if (!(s.points[i] == s.points[0])) {
                base2 = i;
                break;
            }
        }
        if (base2 >= 0) {
            for (int i = 0; i < n; ++i) {
                if (!collinear(s.points[0], s.points[base2], s.points[i])) {
                    rep.all_collinear = false;
                    break;
                }
            }
        }
    }

    if (rep.duplicate_points.empty()) {
        rep.position = classify_position(s);
    } else {
        rep.position = PositionClass::Any;
    }

    rep.valid = rep.duplicate_points.empty() && rep.non_integral_pairs.empty() &&
                !rep.all_collinear;
    return rep;
}

} // namespace ipset
