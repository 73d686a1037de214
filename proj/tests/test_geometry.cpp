#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracle.hpp"
#include "setlat/upper_set.hpp"

using namespace setlat;

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

const PolyCone C2 = orthant(2);

UpperSet quadrant(double a, double b) { return upper_close({v2(a, b)}, {}, C2); }

}  // namespace

TEST_CASE("upper_close basics") {
    UpperSet q = upper_close({v2(1, 2)}, {}, C2);
    CHECK(q.is_proper());
    REQUIRE(q.vertices().size() == 1);
    CHECK((q.vertices()[0] - v2(1, 2)).norm() < kGeomTol);
    CHECK(q.rays().size() == 2);

    CHECK(upper_close({}, {}, C2).is_empty());

    UpperSet hull = upper_close({v2(2, 0), v2(0, 2)}, {}, C2);
    CHECK(hull.vertices().size() == 2);
    // H-rep must be {z1 >= 0, z2 >= 0, z1+z2 >= 2}
    CHECK(support(hull, v2(1, 0)).value() == doctest::Approx(0.0).epsilon(kGeomTol));
    CHECK(support(hull, v2(0, 1)).value() == doctest::Approx(0.0).epsilon(kGeomTol));
    CHECK(support(hull, v2(1, 1)).value() == doctest::Approx(2.0).epsilon(kGeomTol));
    CHECK(hull.halfspaces().size() == 3);

    CHECK_THROWS(upper_close({Vec::Zero(3)}, {}, C2));
}

TEST_CASE("lattice_inf conventions and examples") {
    CHECK(lattice_inf({}, C2).is_empty());
    UpperSet a = quadrant(1, 1);
    CHECK(set_equal(lattice_inf({a}), a));
    UpperSet hull = upper_close({v2(2, 0), v2(0, 2)}, {}, C2);
    CHECK(set_equal(lattice_inf({quadrant(2, 0), quadrant(0, 2)}), hull));
    // inf with EMPTY drops the empty member, inf with FULL absorbs
    CHECK(set_equal(lattice_inf({a, UpperSet::empty(C2)}), a));
    CHECK(lattice_inf({a, UpperSet::full(C2)}).is_full());
    // F-mode flags the non-convex union but returns the hull
    bool hull_needed = false;
    UpperSet f = lattice_inf({quadrant(2, 0), quadrant(0, 2)}, LatticeMode::F, &hull_needed);
    CHECK(hull_needed);
    CHECK(set_equal(f, hull));
    lattice_inf({quadrant(0, 0), quadrant(1, 1)}, LatticeMode::F, &hull_needed);
    CHECK_FALSE(hull_needed);  // nested union is already convex
}

TEST_CASE("lattice_sup conventions and examples") {
    CHECK(lattice_sup({}, C2).is_full());
    CHECK(set_equal(lattice_sup({quadrant(2, 0), quadrant(0, 2)}), quadrant(2, 2)));
    CHECK(lattice_sup({quadrant(1, 1), UpperSet::empty(C2)}).is_empty());
    CHECK(set_equal(lattice_sup({quadrant(1, 1), UpperSet::full(C2)}), quadrant(1, 1)));
}

TEST_CASE("minkowski_add") {
    CHECK(set_equal(minkowski_add(quadrant(1, 0), quadrant(0, 1)), quadrant(1, 1)));
    CHECK(minkowski_add(quadrant(1, 1), UpperSet::empty(C2)).is_empty());
    CHECK(minkowski_add(UpperSet::empty(C2), UpperSet::full(C2)).is_empty());
    CHECK(minkowski_add(quadrant(1, 1), UpperSet::full(C2)).is_full());
    UpperSet hs = from_hrep({{v2(1, 1), -1.0}}, C2);
    CHECK(set_equal(minkowski_add(quadrant(0, 0), hs), hs));
}

TEST_CASE("scale conventions") {
    UpperSet clC = upper_close({v2(0, 0)}, {}, C2);
    CHECK(set_equal(scale(0.0, UpperSet::empty(C2)), clC));
    CHECK(set_equal(scale(0.0, quadrant(3, -1)), clC));
    CHECK(set_equal(scale(2.0, quadrant(1, 1)), quadrant(2, 2)));
    CHECK(scale(3.0, UpperSet::empty(C2)).is_empty());
    CHECK(scale(2.0, UpperSet::full(C2)).is_full());
    CHECK_THROWS(scale(-1.0, quadrant(0, 0)));
}

TEST_CASE("contains and set_equal") {
    CHECK(contains(UpperSet::full(C2), quadrant(5, 5)));
    CHECK(contains(quadrant(0, 0), quadrant(1, 1)));
    CHECK_FALSE(contains(quadrant(1, 1), quadrant(0, 0)));
    UpperSet hull = upper_close({v2(2, 0), v2(0, 2)}, {}, C2);
    CHECK(contains(hull, quadrant(2, 0)));
    CHECK_FALSE(contains(quadrant(2, 0), hull));
    CHECK(contains(quadrant(1, 1), UpperSet::empty(C2)));
    CHECK(set_equal(hull, upper_close({v2(0, 2), v2(1, 1), v2(2, 0)}, {}, C2)));
}

TEST_CASE("support values") {
    CHECK(support(quadrant(1, 2), v2(1, 1)).value() == doctest::Approx(3.0));
    CHECK(support(UpperSet::empty(C2), v2(1, 1)).is_pos_inf());
    CHECK(support(quadrant(0, 0), v2(1, -1)).is_neg_inf());
    CHECK(support(UpperSet::full(C2), v2(1, 1)).is_neg_inf());
    CHECK(support(UpperSet::full(C2), v2(0, 0)).value() == 0.0);
}

TEST_CASE("to_hrep / from_hrep round trips") {
    UpperSet q = quadrant(1, 2);
    auto hs = to_hrep(q);
    REQUIRE(hs.size() == 2);
    CHECK(set_equal(from_hrep(hs, C2), q));
    CHECK(to_hrep(UpperSet::full(C2)).empty());

    UpperSet hull = upper_close({v2(2, 0), v2(0, 2)}, {}, C2);
    CHECK(set_equal(from_hrep(to_hrep(hull), C2), hull));

    // normals must lie in C+
    CHECK_THROWS(from_hrep({{v2(1, -1), 0.0}}, C2));
}

TEST_CASE("member") {
    UpperSet hull = upper_close({v2(2, 0), v2(0, 2)}, {}, C2);
    CHECK(member(hull, v2(1, 1)));
    CHECK(member(hull, v2(2, 0)));
    CHECK_FALSE(member(hull, v2(0.5, 0.5)));
    CHECK(member(UpperSet::full(C2), v2(-9, -9)));
    CHECK_FALSE(member(UpperSet::empty(C2), v2(0, 0)));
}

TEST_CASE("dual_cone examples and involution") {
    PolyCone d = dual_cone(C2);
    CHECK(d == C2);

    PolyCone ray(2, {v2(0, 1)});
    PolyCone h = dual_cone(ray);
    CHECK(h.contains(v2(1, 0)));
    CHECK(h.contains(v2(-1, 0)));
    CHECK(h.contains(v2(0, 1)));
    CHECK_FALSE(h.contains(v2(0, -1)));

    PolyCone k(2, {v2(1, 0), v2(1, 1)});
    PolyCone kd = dual_cone(k);
    CHECK(kd.contains(v2(0, 1)));
    CHECK(kd.contains(v2(1, -1)));
    CHECK_FALSE(kd.contains(v2(-0.1, 1)));
    CHECK(dual_cone(dual_cone(k)) == k);

    std::mt19937 rng(20260826);
    for (int t = 0; t < 25; ++t) {
        PolyCone K = oracle::random_cone(rng, 2 + t % 3);
        CHECK(dual_cone(dual_cone(K)) == K);
    }
}

TEST_CASE("H-rep consistency against the subset-enumeration oracle") {
    std::mt19937 rng(4711);
    for (int t = 0; t < 40; ++t) {
        int q = 2 + t % 2;
        PolyCone C = oracle::random_cone(rng, q);
        UpperSet A = oracle::random_upper(rng, C);
        REQUIRE(A.is_proper());
        // every H-rep facet is supported exactly
        for (const auto& h : A.halfspaces()) {
            auto s = support(A, h.normal);
            REQUIRE(s.is_finite());
            CHECK(s.value() == doctest::Approx(h.offset).epsilon(1e-9));
        }
        // reconstruction from its own H-rep is the identity
        CHECK(set_equal(from_hrep(A.halfspaces(), C), A));
        // rays of A recede in every direction of C
        for (const auto& g : C.generators()) {
            for (const auto& h : A.halfspaces()) CHECK(h.normal.dot(g) >= -1e-9);
        }
        // oracle H-rep of the same generating data agrees on supports
        std::vector<Vec> rays = A.rays();
        auto hs = oracle::hull_hrep(A.vertices(), rays, q);
        for (const auto& h : A.halfspaces()) {
            auto so = oracle::vrep_support(A.vertices(), rays, h.normal);
            REQUIRE(so.is_finite());
            CHECK(so.value() == doctest::Approx(h.offset).epsilon(1e-8));
        }
        for (const auto& h : hs) {
            auto s = support(A, h.normal);
            if (s.is_finite()) CHECK(s.value() == doctest::Approx(h.offset).epsilon(1e-8));
        }
    }
}

TEST_CASE("conlinear axioms on random triples (smoke; the full sweep is acceptance)") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    const PolyCone C = C2;
    UpperSet theta = upper_close({Vec::Zero(2)}, {}, C);
    for (int t = 0; t < 10; ++t) {
        UpperSet A = oracle::random_upper(rng, C);
        UpperSet B = oracle::random_upper(rng, C);
        UpperSet W = oracle::random_upper(rng, C);
        double r = u(rng), s = u(rng);
        CHECK(set_equal(minkowski_add(A, B), minkowski_add(B, A)));
        CHECK(set_equal(minkowski_add(minkowski_add(A, B), W),
                        minkowski_add(A, minkowski_add(B, W))));
        CHECK(set_equal(minkowski_add(A, theta), A));
        CHECK(set_equal(scale(r, minkowski_add(A, B)), minkowski_add(scale(r, A), scale(r, B))));
        CHECK(set_equal(scale(s, scale(r, A)), scale(s * r, A)));
        CHECK(set_equal(scale(1.0, A), A));
        CHECK(set_equal(scale(0.0, theta), theta));
        CHECK(set_equal(scale(r + s, A), minkowski_add(scale(r, A), scale(s, A))));
        // order compatibility
        UpperSet lo = lattice_inf({A, B});
        CHECK(contains(lo, A));
        CHECK(contains(minkowski_add(lo, W), minkowski_add(A, W)));
        CHECK(contains(scale(r, lo), scale(r, A)));
        // lattice laws
        CHECK(set_equal(lattice_sup({A, lattice_inf({A, B})}), A));
        CHECK(set_equal(lattice_inf({A, lattice_sup({A, B})}), A));
    }
}
