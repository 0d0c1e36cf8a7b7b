#include <doctest.h>

#include <algorithm>

#include "ipset/bounds.hpp"
#include "ipset/constructions.hpp"

using namespace ipset;

TEST_CASE("facher 3: the classical 3-4-5 fan") {
    const PointSet s = facher(3);
    REQUIRE(s.n() == 4);
    CHECK(s.k == Integer(1));
    // apex first, then on-line points by ascending x
    CHECK(s.points[0].x == Rational(0));
    CHECK(s.points[0].r == Rational(3));
    CHECK(s.points[1].x == Rational(-4));
    CHECK(s.points[2].x == Rational(0));
    CHECK(s.points[3].x == Rational(4));
    CHECK(diameter(s) == Integer(8));
    CHECK(validate(s).valid);
    CHECK(classify_position(s) == PositionClass::Any);
}

TEST_CASE("facher 4: legs 0 and 3") {
    const PointSet s = facher(4);
    REQUIRE(s.n() == 4);
    CHECK(diameter(s) == Integer(6));
    const auto spec = facher_spec(4);
    CHECK(spec.legs == std::vector<Integer>{0, 3});
    CHECK(validate(s).valid);
}

TEST_CASE("facher 12: divisor pairs of 144 with equal parity") {
    const auto spec = facher_spec(12);
    CHECK(spec.legs == std::vector<Integer>{0, 5, 9, 16, 35});
    const PointSet s = facher(12);
    CHECK(s.n() == 10);
    CHECK(diameter(s) == Integer(70));
    CHECK(validate(s).valid);

    // hypotenuse of every leg is integral by construction
    const auto dm = distance_matrix(s);
    for (int i = 1; i < s.n(); ++i) CHECK(dm[0][i] > 0);
}

TEST_CASE("facher validates for every height that yields three or more points") {
    for (long h = 3; h <= 15; ++h) {
        const PointSet s = facher(h);
        REQUIRE(s.n() >= 4);
        const auto vr = validate(s);
        CHECK(vr.valid);
        CHECK(vr.position == PositionClass::Any); // >= 3 on-line points
    }
}

TEST_CASE("facher heights 1 and 2 degenerate to a single hypotenuse-free pair") {
    CHECK(facher(1).n() == 2);
    CHECK(facher(2).n() == 2);
    CHECK_FALSE(validate(facher(1)).valid); // two points sit on one line
    CHECK_THROWS_AS(facher(0), InvalidParameter);
}

TEST_CASE("circular 3 is an inscribed right triangle") {
    const PointSet s = circular(3);
    REQUIRE(s.n() == 3);
    CHECK(validate(s).valid);
    const auto dm = distance_matrix(s);
    std::vector<Integer> dists{dm[0][1], dm[0][2], dm[1][2]};
    std::sort(dists.begin(), dists.end());
    CHECK(dists == std::vector<Integer>{15, 20, 25}); // scaled 3-4-5
}

TEST_CASE("circular sets validate, avoid collinear triples, and are concyclic") {
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        const PointSet s = circular(n);
        REQUIRE(s.n() == n);
        const auto vr = validate(s);
        CHECK(vr.valid);
        CHECK(vr.position != PositionClass::Any);
        // the whole set lies on one circle: every quadruple is concyclic
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int l = j + 1; l < n; ++l) {
                    for (int h = l + 1; h < n; ++h) {
                        CHECK(concyclic(s.points[i], s.points[j], s.points[l],
                                        s.points[h], s.k));
                    }
                }
            }
        }
        // cube-root minimum-distance bound, exact integer form
        CHECK(cube_root_min_distance_holds(s));
    }
}

TEST_CASE("circular spec angles sit on the unit circle") {
    const auto spec = circular_spec(8);
    REQUIRE(spec.angles.size() == 8);
    for (const auto& a : spec.angles) {
        CHECK(a.sin * a.sin + a.cos * a.cos == Rational(1));
        CHECK(a.sin >= 0); // half-angles live in [0, pi)
    }
    CHECK(spec.scale > 0);
}

TEST_CASE("circular rejects silly cardinalities and exhausted pools") {
    CHECK_THROWS_AS(circular(2), InvalidParameter);
    CHECK_THROWS_AS(circular(100000), ConstructionBudgetExceeded);
}
