#include "ipset/constructions.hpp"

#include <algorithm>
#include <set>

#include "ipset/numtheory.hpp"

namespace ipset {

FacherSpec facher_spec(const Integer& h) {
    if (h < 1) throw InvalidParameter("facher: height must be >= 1");
    // x^2 + h^2 = c^2  <=>  h^2 = (c - x)(c + x) = e * f with e <= f of equal
    // parity; then x = (f - e)/2 and c = (f + e)/2.
    const Integer h_sq = h * h;
    std::set<Integer> legs;
    for (Integer e = 1; e * e <= h_sq; ++e) {
        if (h_sq % e != 0) continue;
        const Integer f = h_sq / e;
        if ((f - e) % 2 != 0) continue;
        legs.insert((f - e) / 2);
    }
    FacherSpec spec;
    spec.h = h;
    spec.legs.assign(legs.begin(), legs.end());
    return spec;
}

PointSet facher(const Integer& h) {
    const FacherSpec spec = facher_spec(h);
    PointSet s;
    s.k = 1;
    s.points.push_back({Rational(0), Rational(h)}); // apex first
    std::vector<Rational> xs;
    for (const Integer& leg : spec.legs) {
        xs.emplace_back(leg);
        if (leg != 0) {
            const Integer neg = -leg;
            xs.emplace_back(neg);
        }
    }
    std::sort(xs.begin(), xs.end());
    for (const Rational& x : xs) s.points.push_back({x, Rational(0)});
    return s;
}

namespace {

struct AngleKey {
    Rational sin, cos;
    bool operator<(const AngleKey& other) const {
        const int cs = cmp(sin, other.sin);
        if (cs != 0) return cs < 0;
        return cmp(cos, other.cos) < 0;
    }
};

// Half-angles with rational sine and cosine, drawn from primitive
// Pythagorean triples and ordered by denominator so that the common scale
// (the lcm of the denominators) grows as slowly as possible.
std::vector<CircularAngle> angle_pool(std::size_t count) {
    std::vector<std::pair<Integer, AngleKey>> pool; // (denominator, angle)
    pool.push_back({1, {Rational(0), Rational(1)}}); // phi = 0
    pool.push_back({1, {Rational(1), Rational(0)}}); // phi = pi/2

    const long generator_cap = 64;
    for (long m = 2; m <= generator_cap; ++m) {
        for (long v = 1; v < m; ++v) {
            if ((m - v) % 2 == 0) continue;
            if (mpz_class(gcd(Integer(m), Integer(v))) != 1) continue;
            const Integer a = Integer(m) * m - Integer(v) * v;
            const Integer b = 2 * Integer(m) * v;
            const Integer c = Integer(m) * m + Integer(v) * v;
            const Rational sa = make_rational(a, c);
            const Rational sb = make_rational(b, c);
            // Four distinct half-angles in (0, pi): both acute ones and their
            // reflections through pi/2 (negative cosine).
            pool.push_back({c, {sa, sb}});
            pool.push_back({c, {sb, sa}});
            pool.push_back({c, {sa, -sb}});
            pool.push_back({c, {sb, -sa}});
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& lhs, const auto& rhs) {
                  if (lhs.first != rhs.first) return lhs.first < rhs.first;
                  return lhs.second < rhs.second;
              });
    if (count > pool.size()) {
        throw ConstructionBudgetExceeded(
            "circular: angle pool exhausted at " + std::to_string(pool.size()) +
            " angles, " + std::to_string(count) + " requested");
    }
    std::vector<CircularAngle> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back({pool[i].second.sin, pool[i].second.cos});
    }
    return out;
}

} // namespace

CircularSpec circular_spec(int n) {
    if (n < 3) throw InvalidParameter("circular: n must be >= 3");
    CircularSpec spec;
    spec.angles = angle_pool(static_cast<std::size_t>(n));
    Integer l(1);
    for (const auto& angle : spec.angles) {
        l = lcm(l, Integer(angle.sin.get_den()));
        l = lcm(l, Integer(angle.cos.get_den()));
    }
    // Chords are scale * |sin_i cos_j - cos_i sin_j|; with scale = l^2 every
    // chord clears its denominator (which divides l^2) and becomes an integer.
    spec.scale = l * l;
    return spec;
}

PointSet circular(int n) {
    const CircularSpec spec = circular_spec(n);
    const Rational radius = make_rational(spec.scale, 2);

    PointSet s;
    s.k = 1;
    for (const auto& angle : spec.angles) {
        // Point at full angle 2*phi on the circle of radius scale/2.
        const Rational cos2 = angle.cos * angle.cos - angle.sin * angle.sin;
        const Rational sin2 = 2 * angle.sin * angle.cos;
        s.points.push_back({radius * cos2, radius * sin2});
    }
    return s;
}

} // namespace ipset
