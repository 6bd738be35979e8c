#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tetratrig/suites.hpp"
#include "tetratrig/tetra.hpp"
#include "test_util.hpp"

using namespace tetratrig;
using testutil::rel;

namespace {

constexpr double kPi = std::numbers::pi;

MetricSpec uniform(Geometry g, double l) {
    MetricSpec s;
    s.geometry = g;
    s.lengths.fill(l);
    return s;
}

}  // namespace

TEST_CASE("metric validation") {
    CHECK_NOTHROW(validate_metric(uniform(Geometry::Hyperbolic, 1.0)));
    CHECK_NOTHROW(validate_metric(uniform(Geometry::Spherical, kPi / 2)));
    MetricSpec bad{Geometry::Hyperbolic, {0.2, 0.2, 0.2, 0.2, 0.2, 5.0}};
    CHECK_FALSE(is_realizable(bad));
    CHECK_THROWS_AS(validate_metric(bad), Error);
    // four points on a great circle: Gram determinant zero
    MetricSpec flat{Geometry::Spherical, {kPi / 2, kPi, kPi / 2, kPi / 2, kPi, kPi / 2}};
    CHECK_THROWS_AS(validate_metric(flat), Error);
}

TEST_CASE("angle oracle on known tetrahedra") {
    for (double a : metric_angles_oracle(uniform(Geometry::Spherical, kPi / 2))) CHECK(a == doctest::Approx(kPi / 2));
    // small regular tetrahedra approach the Euclidean dihedral angle
    for (Geometry g : {Geometry::Spherical, Geometry::Hyperbolic})
        for (double a : metric_angles_oracle(uniform(g, 0.05))) CHECK(a == doctest::Approx(std::acos(1.0 / 3)).epsilon(1e-2));
    // regular spherical tetrahedra are fatter, hyperbolic ones thinner
    CHECK(metric_angles_oracle(uniform(Geometry::Spherical, 1.0))[0] > std::acos(1.0 / 3));
    CHECK(metric_angles_oracle(uniform(Geometry::Hyperbolic, 1.0))[0] < std::acos(1.0 / 3));
}

TEST_CASE("marked tetrahedron incidences") {
    for (const auto& s : random_specs(Geometry::Hyperbolic, 10, 3)) {
        MarkedTetra T = from_metric(s);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (j != i) CHECK(incidence(T.H[j], T.A[i]) < 1e-9);
                if (j == i) continue;
                CHECK(T.Q.residual(T.E[i][j]) < 1e-9);
                CHECK(line_distance(T.edge_line(i, j), T.E[i][j]) < 1e-9);
            }
            CHECK(T.Q.residual(T.A[i]) > 1e-3);
        }
    }
}

TEST_CASE("edge cross-ratios and the length function encode the lengths") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 15, 4)) {
            MarkedTetra T = from_metric(s);
            CharacterHom L = length_function(T);
            LiftData lift = lift_data(T);
            CHECK(lift.residual < 1e-9);
            for (int k = 0; k < 6; ++k) {
                double l = s.lengths[k];
                cplx expect = g == Geometry::Hyperbolic ? cplx(std::exp(2 * l)) : std::polar(1.0, 2 * l);
                auto [i, j] = kEdgeVerts[k];
                cplx cr = edge_cross_ratio(T, i, j);
                CHECK(std::min(rel(cr, expect), rel(cr, 1.0 / expect)) < 1e-9);
                CHECK(rel(L(LatticeVec::unit(edge_aff(k))), expect) < 1e-9);
                CHECK(rel(lift.a[k] * lift.a[k], expect) < 1e-9);
            }
            // faces: the half-sum equals the Menelaus face value
            const int faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
            for (int f = 0; f < 4; ++f)
                CHECK(rel(L(face_vectors_L()[f]), face_value(T, faces[f][0], faces[f][1], faces[f][2])) < 1e-8);
        }
}

TEST_CASE("the angle function encodes the dihedral angles") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 15, 5)) {
            CharacterHom A = angle_function(from_metric(s));
            auto alpha = metric_angles_oracle(s);
            for (int k = 0; k < 6; ++k)
                CHECK(rel(A(LatticeVec::unit(edge_aff(k))), std::polar(1.0, 2 * (kPi - alpha[k]))) < 1e-9);
        }
}

TEST_CASE("gauge flips leave the length function unchanged on roots") {
    auto e7 = sub_roots(SubSystem::E7L);
    for (const auto& s : random_specs(Geometry::Spherical, 5, 6)) {
        CharacterHom L = length_function(from_metric(s));
        for (int v = 0; v < 4; ++v) {
            CharacterHom f = L.gauge_flip(v);
            CHECK(f.gauge_flip(v).base == L.base);
            for (const auto& r : e7) CHECK(rel(f(r), L(r)) < 1e-12);
        }
    }
}

TEST_CASE("character homomorphisms reject vectors outside their domain") {
    CharacterHom L;
    CHECK_THROWS_AS(L(LatticeVec::unit(kI)), Error);
    CHECK(L(LatticeVec::unit(k12)) == cplx(1.0));
}

TEST_CASE("determinant forms agree and are W(D6)-invariant") {
    std::mt19937_64 rng(7);
    for (const auto& s : random_specs(Geometry::Hyperbolic, 10, 8)) {
        CharacterHom L = length_function(from_metric(s));
        cplx d = det_L(L);
        CHECK(rel(d, det_L_roots(L)) < 1e-10);
        for (int t = 0; t < 5; ++t) CHECK(rel(det_L(L.compose(WeylD6::instance().random_element(rng))), d) < 1e-9);
        CHECK(is_generic(L));
    }
}

TEST_CASE("the all-right spherical tetrahedron is not generic") {
    MarkedTetra T = from_metric(uniform(Geometry::Spherical, kPi / 2));
    CHECK_FALSE(is_generic(length_function(T)));
    for (int k = 0; k < 6; ++k) CHECK(rel(length_function(T)(LatticeVec::unit(edge_aff(k))), -1.0) < 1e-12);
}

TEST_CASE("dual tetrahedron: its dual has the original angle data") {
    for (const auto& s : random_specs(Geometry::Hyperbolic, 5, 9)) {
        MarkedTetra T = from_metric(s);
        MarkedTetra D = dual_tetra(T);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) CHECK(T.Q.residual(D.E[i][j]) < 1e-9);
        CharacterHom A = angle_function(T), Ld = length_function(D);
        for (int k = 0; k < 6; ++k) {
            int e = edge_aff(k);
            CHECK(rel(A(LatticeVec::unit(e)), Ld(LatticeVec::unit(aff_complement(e)))) < 1e-9);
        }
    }
}

TEST_CASE("reconstruction from the length function round-trips") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 8, 10)) {
            MarkedTetra T = from_metric(s);
            CharacterHom L = length_function(T);
            Reconstruction r = reconstruct_from_L(L, T.orientation);
            CHECK(r.convention == QuadricSign::Symmetric);
            CHECK(r.symmetric_residual < 1e-8);
            CHECK(r.verbatim_residual > 1e-3);
            CHECK(round_trip_residual(r.T, L) < 1e-8);
        }
}

TEST_CASE("canonical orientation: both markings are valid, one is canonical") {
    for (const auto& s : random_specs(Geometry::Hyperbolic, 5, 11)) {
        int c = canonical_orientation(s);
        CHECK(from_metric(s).orientation == c);
        CHECK(from_metric(s, OrientationChoice::Zero).orientation == 0);
        CHECK(from_metric(s, OrientationChoice::One).orientation == 1);
    }
}
