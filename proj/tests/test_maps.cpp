#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracle.hpp"
#include "setlat/maps.hpp"
#include "setlat/scalarization.hpp"

using namespace setlat;

namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

const PolyCone C2 = orthant(2);

// f(x) = {(x,x)} + R^2_+ on all of R
SetValuedMap identity_pair() {
    Mat F(2, 1);
    F << 1.0, 1.0;
    return SetValuedMap::affine(Polyhedron::whole_space(1),
                                {{F, Vec::Zero(2), upper_close({Vec::Zero(2)}, {}, C2)}}, C2);
}

SetValuedMap empty_map() {
    Mat E(2, 1);
    E << 1.0, -1.0;
    Vec e(2);
    e << -1.0, -1.0;  // x <= -1 and x >= 1: empty domain
    Mat F(2, 1);
    F << 1.0, 1.0;
    return SetValuedMap::affine({E, e}, {{F, Vec::Zero(2), upper_close({Vec::Zero(2)}, {}, C2)}},
                                C2);
}

}  // namespace

TEST_CASE("polyhedron and vrep enumeration") {
    auto box = Polyhedron::box(2, -1.0, 2.0);
    CHECK(box.contains(v2(0, 0)));
    CHECK(box.contains(v2(2, -1)));
    CHECK_FALSE(box.contains(v2(2.1, 0)));
    auto vr = enumerate_vrep(box);
    CHECK(vr.vertices.size() == 4);
    CHECK(vr.rays.empty());

    // unbounded: x1 >= 0, x2 >= 0, x1 - x2 <= 1
    Mat E(3, 2);
    E << -1, 0, 0, -1, 1, -1;
    Vec e(3);
    e << 0, 0, 1;
    auto vu = enumerate_vrep({E, e});
    std::vector<Halfspace> hs;
    for (int i = 0; i < E.rows(); ++i) hs.push_back({-E.row(i).transpose(), -e(i)});
    auto ov = oracle::hrep_vrep(hs, 2);
    CHECK(vu.vertices.size() == ov.vertices.size());
    CHECK(vu.rays.size() == ov.rays.size());
    for (const Vec& d : {v2(1, 0), v2(0, 1), v2(1, 1), v2(-1, 2)}) {
        auto a = oracle::vrep_support(vu.vertices, vu.rays, d);
        auto b = oracle::vrep_support(ov.vertices, ov.rays, d);
        CHECK(a.raw() == doctest::Approx(b.raw()).epsilon(1e-8));
    }

    auto ve = enumerate_vrep(empty_map().domain());
    CHECK(ve.vertices.empty());
}

TEST_CASE("SetValuedMap evaluation") {
    auto f = identity_pair();
    CHECK(set_equal(f.value(v1(2)), upper_close({v2(2, 2)}, {}, C2)));
    auto fe = empty_map();
    CHECK(fe.value(v1(0)).is_empty());

    // two pieces: value is the G-infimum of the pieces
    Mat F1(2, 1), F2(2, 1);
    F1 << 1.0, 0.0;
    F2 << 0.0, 1.0;
    UpperSet Q = upper_close({Vec::Zero(2)}, {}, C2);
    auto two = SetValuedMap::affine(Polyhedron::whole_space(1), {{F1, Vec::Zero(2), Q},
                                                                {F2, Vec::Zero(2), Q}}, C2);
    CHECK(set_equal(two.value(v1(2)),
                    lattice_inf({upper_close({v2(2, 0)}, {}, C2), upper_close({v2(0, 2)}, {}, C2)})));

    // parametric maps evaluate but expose no pieces
    auto par = SetValuedMap::parametric(
        1, [](const Vec& x) { return upper_close({v2(x(0), -x(0))}, {}, orthant(2)); }, C2);
    CHECK(set_equal(par.value(v1(3)), upper_close({v2(3, -3)}, {}, C2)));
}

TEST_CASE("declared convexity holds on random convex maps (midpoint form)") {
    // single-piece maps: an affine image of a convex domain plus a fixed tail
    std::mt19937 rng(771);
    for (int t = 0; t < 20; ++t) {
        auto inst = oracle::random_instance(rng, 2, 2, 2);
        const auto& f = inst.f;
        Vec a = oracle::random_vec(rng, 2, 0.9), b = oracle::random_vec(rng, 2, 0.9);
        Vec mid = 0.5 * (a + b);
        UpperSet rhs = minkowski_add(scale(0.5, f.value(a)), scale(0.5, f.value(b)));
        CHECK(contains(f.value(mid), rhs));
    }
}

TEST_CASE("S_of") {
    UpperSet s = S_of(v2(1, 1), C2);
    CHECK(set_equal(s, from_hrep({{v2(1, 1), 0.0}}, C2)));
    CHECK(member(s, v2(3, -2)));
    CHECK_FALSE(member(s, v2(-3, 2)));
    CHECK(set_equal(S_of(v2(1, 0), C2), from_hrep({{v2(1, 0), 0.0}}, C2)));
    CHECK_THROWS(S_of(v2(1, -1), C2));
    CHECK_THROWS(S_of(v2(0, 0), C2));
}

TEST_CASE("S_pair including degenerate z*") {
    UpperSet s = S_pair(v1(2), v2(1, 1), v1(3), C2);
    CHECK(set_equal(s, from_hrep({{v2(1, 1), 6.0}}, C2)));
    CHECK(set_equal(S_pair(v1(0), v2(1, 1), v1(5), C2), S_of(v2(1, 1), C2)));
    CHECK(S_pair(v1(1), v2(0, 0), v1(1), C2).is_empty());
    CHECK(S_pair(v1(1), v2(0, 0), v1(-1), C2).is_full());
    CHECK(S_pair(v1(1), v2(0, 0), v1(0), C2).is_full());
}

TEST_CASE("S additivity and positive homogeneity") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 20; ++t) {
        Vec ys = oracle::random_vec(rng, 2);
        Vec zs = oracle::random_dual_dir(rng, C2);
        Vec y1 = oracle::random_vec(rng, 2), y2 = oracle::random_vec(rng, 2);
        double tt = 0.25 + t * 0.1;
        CHECK(set_equal(S_pair(ys, zs, y1 + y2, C2),
                        minkowski_add(S_pair(ys, zs, y1, C2), S_pair(ys, zs, y2, C2))));
        CHECK(set_equal(S_pair(ys, zs, tt * y1, C2), scale(tt, S_pair(ys, zs, y1, C2))));
        CHECK(set_equal(S_pair(Vec::Zero(2), zs, y1, C2), S_of(zs, C2)));
    }
}

TEST_CASE("conjugate examples") {
    auto f = identity_pair();
    // x* = 2: inf_x (2x - 2x) = 0
    CHECK(set_equal(conjugate(f, v1(2), v2(1, 1)), from_hrep({{v2(1, 1), 0.0}}, C2)));
    // x* = 3: linear descent
    CHECK(conjugate(f, v1(3), v2(1, 1)).is_full());
    CHECK(conjugate(empty_map(), v1(0), v2(1, 1)).is_empty());
    CHECK_THROWS(conjugate(f, v1(0), v2(1, -1)));
}

TEST_CASE("Young-Fenchel inequality on random maps") {
    std::mt19937 rng(31337);
    for (int t = 0; t < 30; ++t) {
        auto inst = oracle::random_instance(rng, 2, 2, 2, true);
        const auto& f = inst.f;
        Vec xs = oracle::random_vec(rng, 2);
        Vec zs = oracle::random_dual_dir(rng, f.cone());
        Vec x = oracle::random_vec(rng, 2, 0.9);
        UpperSet rhs = minkowski_add(f.value(x), S_pair(xs, zs, -x, f.cone()));
        CHECK(contains(conjugate(f, xs, zs), rhs));
    }
}

TEST_CASE("conjugate agrees with the scalar conjugate oracle") {
    std::mt19937 rng(555);
    for (int t = 0; t < 40; ++t) {
        auto inst = oracle::random_instance(rng, 2, 2, 2, true);
        const auto& f = inst.f;
        Vec xs = oracle::random_vec(rng, 2);
        Vec zs = oracle::random_dual_dir(rng, f.cone());
        ExtReal beta = scalar_conjugate(f, zs, xs);
        UpperSet conj = conjugate(f, xs, zs);
        if (beta.is_neg_inf()) {
            CHECK(conj.is_full());
        } else if (beta.is_pos_inf()) {
            CHECK(conj.is_empty());
        } else {
            CHECK(support(conj, zs).value() == doctest::Approx(beta.value()).epsilon(1e-7));
        }
    }
}

TEST_CASE("biconjugate") {
    auto f = identity_pair();
    // facet-complete family for values of f: the two unit normals plus the tilt
    // x* = F^T z* that makes the offset exact at every x
    std::vector<Direction> dirs;
    Mat Ft(1, 2);
    Ft << 1.0, 1.0;
    for (const Vec& zs : {v2(1, 0), v2(0, 1), v2(1, 1)}) dirs.push_back({Ft * zs, zs});
    for (double x : {-1.5, 0.0, 2.0})
        CHECK(set_equal(biconjugate(f, v1(x), dirs), f.value(v1(x))));
    // single direction: a half-space superset (Young-Fenchel)
    UpperSet one = biconjugate(f, v1(1), {dirs[2]});
    CHECK(contains(one, f.value(v1(1))));
    CHECK(one.halfspaces().size() == 1);
    CHECK_THROWS(biconjugate(f, v1(0), {}));
}

TEST_CASE("biconjugate separates points outside a closed domain") {
    // f(x) = {(x,x)} + R^2_+ on x >= 0
    Mat E(1, 1);
    E << -1.0;
    Mat F(2, 1);
    F << 1.0, 1.0;
    auto f = SetValuedMap::affine({E, Vec::Zero(1)},
                                  {{F, Vec::Zero(2), upper_close({Vec::Zero(2)}, {}, C2)}}, C2);
    std::vector<Direction> dirs;
    for (const Vec& zs : {v2(1, 0), v2(0, 1), v2(1, 1)}) {
        dirs.push_back({v1(zs.sum()), zs});  // F^T z*
        dirs.push_back({Vec::Zero(1), zs});
        dirs.push_back({v1(-4), zs});  // strongly active at the boundary x = 0
    }
    CHECK(set_equal(biconjugate(f, v1(1), dirs), f.value(v1(1))));
    // Off the domain no finite family can reach EMPTY (finitely many
    // half-spaces with normals in C+ always intersect), but escalating tilts
    // separate any fixed point: the biconjugate diverges as x* grows.
    UpperSet off = biconjugate(f, v1(-1), dirs);
    CHECK_FALSE(member(off, v2(-1, -1)));
    double prev = support(off, v2(1, 1)).value();
    for (double t : {16.0, 64.0}) {
        std::vector<Direction> steep = dirs;
        steep.push_back({v1(-t), v2(1, 1)});
        double cur = support(biconjugate(f, v1(-1), steep), v2(1, 1)).value();
        CHECK(cur > prev + 1.0);
        prev = cur;
    }
}

TEST_CASE("base_of") {
    auto b = base_of(dual_cone(C2), v2(1, 1));
    REQUIRE(b.size() == 2);
    for (const auto& z : b) CHECK(z.dot(v2(1, 1)) == doctest::Approx(1.0));
    auto b2 = base_of(dual_cone(C2), v2(2, 1));
    for (const auto& z : b2) CHECK(z.dot(v2(2, 1)) == doctest::Approx(1.0));
    CHECK_THROWS(base_of(dual_cone(C2), v2(1, 0)));
}

TEST_CASE("base conjugate and its relation to the Fenchel conjugate") {
    // f constant A on the box [-1,1]
    Mat F = Mat::Zero(2, 1);
    UpperSet A = upper_close({v2(1, 0), v2(0, 1)}, {}, C2);
    auto f = SetValuedMap::affine(Polyhedron::box(1, -1.0, 1.0), {{F, Vec::Zero(2), A}}, C2);
    Vec z0 = v2(1, 1);
    // x* = 0: no tilt, just the union over the domain
    CHECK(set_equal(base_conjugate(f, Vec::Zero(1), z0), A));
    // sweep: A - [min,max] of (x*.x) z0 over the domain
    UpperSet swept = base_conjugate(f, v1(1), z0);
    UpperSet expect = lattice_inf({A.translate(-z0), A.translate(z0)});
    CHECK(set_equal(swept, expect));
    // -f*(x*,z*) = base_conjugate(f,x*,z0) (+) S_of(z*) for z* in B(z0)
    for (const auto& zs : base_of(dual_cone(C2), z0)) {
        for (double xs : {-1.0, 0.0, 0.7}) {
            CHECK(set_equal(conjugate(f, v1(xs), zs),
                            minkowski_add(base_conjugate(f, v1(xs), z0), S_of(zs, C2)), 1e-7));
        }
    }
}
