#include "doctest.h"
#include "test_util.hpp"

#include "tetratrig/projgeom.hpp"

using namespace tetratrig;
using testutil::rand_c;
using testutil::rand_v4;
using testutil::rel;

namespace {

QuadricP3 random_quadric(std::mt19937_64& rng) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = rand_c(rng);
    return QuadricP3(m);
}

PointP3 point_on(const QuadricP3& Q, std::mt19937_64& rng) {
    return line_quadric_intersection({rand_v4(rng), rand_v4(rng)}, Q).first;
}

}  // namespace

TEST_CASE("cross-ratio matches the explicit formula and handles infinity") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        cplx z[4];
        for (auto& x : z) x = rand_c(rng);
        cplx direct = (z[0] - z[1]) * (z[2] - z[3]) / ((z[0] - z[3]) * (z[2] - z[1]));
        CHECK(rel(cross_ratio(P1::finite(z[0]), P1::finite(z[1]), P1::finite(z[2]), P1::finite(z[3])).value(),
                  direct) < 1e-12);
    }
    // [∞, 0, 1, t] = (1 - t)/(1 - 0) in the limit: (z1-z2)(z3-z4)/((z1-z4)(z3-z2)) -> (1-t)/1
    cplx t(0.3, 2.0);
    P1 r = cross_ratio(P1::infinity(), P1::finite(0), P1::finite(1), P1::finite(t));
    CHECK(rel(r.value(), 1.0 - t) < 1e-12);
    CHECK(cross_ratio(P1::finite(0), P1::finite(1), P1::finite(2), P1::finite(0)).is_infinite());
    CHECK_THROWS_AS(cross_ratio(P1::finite(1), P1::finite(1), P1::finite(1), P1::finite(2)), Error);
}

TEST_CASE("cross-ratio is invariant under Möbius maps") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        MobiusMap m = testutil::rand_mobius(rng);
        std::array<P1, 4> z;
        for (auto& x : z) x = P1::finite(rand_c(rng));
        P1 a = cross_ratio(z[0], z[1], z[2], z[3]);
        P1 b = cross_ratio(m(z[0]), m(z[1]), m(z[2]), m(z[3]));
        CHECK(chordal(a, b) < 1e-10);
    }
}

TEST_CASE("mobius_through sends three points to three points") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        std::array<P1, 3> s{P1::finite(rand_c(rng)), P1::finite(rand_c(rng)), P1::infinity()};
        std::array<P1, 3> d{P1::finite(rand_c(rng)), P1::finite(rand_c(rng)), P1::finite(rand_c(rng))};
        MobiusMap m = mobius_through(s, d);
        for (int i = 0; i < 3; ++i) CHECK(chordal(m(s[i]), d[i]) < 1e-10);
        MobiusMap id = m.inverse().compose(m);
        CHECK(id.equals(MobiusMap{}, 1e-9));
    }
    CHECK_THROWS_AS(mobius_through({P1::finite(0), P1::finite(0), P1::finite(1)},
                                   {P1::finite(0), P1::finite(1), P1::finite(2)}),
                    Error);
}

TEST_CASE("chordal distance is a metric bounded by 1") {
    CHECK(chordal(P1::finite(0), P1::infinity()) == doctest::Approx(1.0));
    CHECK(chordal(P1::finite(1), P1::finite(-1)) == doctest::Approx(1.0));
    CHECK(chordal(P1::finite(cplx(2, 1)), P1::finite(cplx(2, 1))) == doctest::Approx(0.0));
    CHECK(chordal(P1::finite(0), P1::finite(1)) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("lines and planes meet where they should") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        PointP3 a = rand_v4(rng), b = rand_v4(rng), c = rand_v4(rng), d = rand_v4(rng);
        PlaneP3 h = plane_through(a, b, c);
        CHECK(incidence(h, a) < 1e-12);
        CHECK(incidence(h, c) < 1e-12);
        LineP3 l{d, rand_v4(rng)};
        PointP3 x = meet(h, l);
        CHECK(incidence(h, x) < 1e-10);
        CHECK(line_distance(l, x) < 1e-10);
        // two coplanar lines
        LineP3 l1{a, b}, l2{c, a + 2.0 * b - c};
        PointP3 y = meet(l1, l2);
        CHECK(line_distance(l1, y) < 1e-10);
        CHECK(line_distance(l2, y) < 1e-10);
        LineP3 k = line_of_planes(h, plane_through(a, b, d));
        CHECK(same_line(k, l1, 1e-9));
    }
}

TEST_CASE("cross-ratio on a line does not depend on the carrier basis") {
    std::mt19937_64 rng(5);
    PointP3 p = rand_v4(rng), q = rand_v4(rng);
    std::array<cplx, 4> s{0.3, cplx(1, 1), -2.0, cplx(0, 0.5)};
    std::array<PointP3, 4> pts;
    for (int i = 0; i < 4; ++i) pts[i] = p + s[i] * q;
    LineP3 other{p + 2.0 * q, p - cplx(0, 1) * q};
    cplx a = cross_ratio_on_line(pts[0], pts[1], pts[2], pts[3], {p, q}).value();
    cplx b = cross_ratio_on_line(pts[0], pts[1], pts[2], pts[3], other).value();
    cplx c = cross_ratio_collinear(pts[0], pts[1], pts[2], pts[3]).value();
    CHECK(rel(a, b) < 1e-10);
    CHECK(rel(a, c) < 1e-10);
    CHECK_THROWS_AS(line_coordinate({p, q}, rand_v4(rng)), Error);
}

TEST_CASE("quadric normal form, polar duality and rulings") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        QuadricP3 Q = random_quadric(rng);
        // to_normal maps Q to xw - yz
        Mat4 n = Q.from_normal().transpose() * Q.matrix() * Q.from_normal();
        cplx s = n(0, 3) * 2.0;
        Mat4 target = Mat4::Zero();
        target(0, 3) = target(3, 0) = 0.5;
        target(1, 2) = target(2, 1) = -0.5;
        CHECK((n / s - target).norm() < 1e-9);

        PointP3 x = rand_v4(rng);
        CHECK(wedge_distance(polar_dual_plane(polar_dual_point(x, Q), Q), x) < 1e-9);
        LineP3 l{rand_v4(rng), rand_v4(rng)};
        CHECK(same_line(polar_dual_line(polar_dual_line(l, Q), Q), l, 1e-8));

        PointP3 p = point_on(Q, rng);
        CHECK(Q.residual(p) < 1e-10);
        for (int o : {0, 1}) {
            Rulings r = rulings_through(p, Q, o);
            for (const LineP3& g : {r.left, r.right}) {
                CHECK(line_distance(g, p) < 1e-9);
                CHECK(Q.residual(g.p) < 1e-9);
                CHECK(Q.residual(g.q) < 1e-9);
                CHECK(Q.residual(g.p + cplx(0.7, -0.2) * g.q) < 1e-9);
            }
            Rulings swapped = rulings_through(p, Q, 1 - o);
            CHECK(same_line(r.left, swapped.right, 1e-8));
        }
        // the two lines of a line's intersection points: rulings recover the polar line
        CHECK(same_line(dual_line_via_rulings(l, Q, 0), polar_dual_line(l, Q), 1e-7));
    }
}

TEST_CASE("conic cross-ratio is independent of the projection center") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        QuadricP3 Q = random_quadric(rng);
        PlaneP3 H = rand_v4(rng);
        auto on_conic = [&] {
            LineP3 l = line_of_planes(H, rand_v4(rng));
            return line_quadric_intersection(l, Q).first;
        };
        std::array<PointP3, 4> pts{on_conic(), on_conic(), on_conic(), on_conic()};
        PointP3 c1 = on_conic(), c2 = on_conic();
        cplx a = cross_ratio_on_conic(pts, Q, H, c1).value();
        cplx b = cross_ratio_on_conic(pts, Q, H, c2).value();
        cplx c = cross_ratio_on_conic(pts, Q, H).value();
        CHECK(rel(a, b) < 1e-7);
        CHECK(rel(a, c) < 1e-7);
        // projecting from one of the four points uses the tangent there
        cplx d = cross_ratio_on_conic(pts, Q, H, pts[0]).value();
        CHECK(rel(a, d) < 1e-7);
    }
}

TEST_CASE("conic_second_point: secant and tangent cuts") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        QuadricP3 Q = random_quadric(rng);
        PlaneP3 H = rand_v4(rng);
        auto on_conic = [&] { return line_quadric_intersection(line_of_planes(H, rand_v4(rng)), Q).first; };
        PointP3 a = on_conic(), b = on_conic();
        PlaneP3 cut = plane_through(a, b, rand_v4(rng));
        CHECK(wedge_distance(conic_second_point(cut, H, Q, a), b) < 1e-8);
        CHECK(wedge_distance(conic_second_point(cut, H, Q, b), a) < 1e-8);
        // plane through the tangent line of the conic at a
        LineP3 tangent = line_of_planes(H, polar_dual_point(a, Q));
        PlaneP3 tcut = plane_of(rand_v4(rng), tangent);
        CHECK(wedge_distance(conic_second_point(tcut, H, Q, a), a) < 1e-7);
        CHECK_THROWS_AS(conic_second_point(cut, H, Q, rand_v4(rng)), Error);
    }
}

TEST_CASE("pencil of planes cross-ratio equals the cross-ratio of a transversal section") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        LineP3 axis{rand_v4(rng), rand_v4(rng)};
        std::array<PointP3, 4> pts;
        LineP3 transversal{rand_v4(rng), rand_v4(rng)};
        std::array<cplx, 4> s{0.1, cplx(2, -1), cplx(-1, 0.3), 4.0};
        std::array<PlaneP3, 4> planes;
        for (int i = 0; i < 4; ++i) {
            pts[i] = transversal.p + s[i] * transversal.q;
            planes[i] = plane_of(pts[i], axis);
        }
        cplx a = cross_ratio_of_planes(planes, axis).value();
        cplx b = cross_ratio_on_line(pts[0], pts[1], pts[2], pts[3], transversal).value();
        CHECK(rel(a, b) < 1e-8);
    }
}

TEST_CASE("default tolerance is process-wide and settable") {
    double saved = default_tol();
    set_default_tol(1e-6);
    CHECK(default_tol() == 1e-6);
    set_default_tol(saved);
    CHECK(default_tol() == saved);
}
