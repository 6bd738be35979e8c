#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tetratrig/chokim.hpp"
#include "tetratrig/suites.hpp"
#include "test_util.hpp"

using namespace tetratrig;
using testutil::rand_c;
using testutil::rel;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0, 1);

MetricSpec all_right() {
    MetricSpec s;
    s.geometry = Geometry::Spherical;
    s.lengths.fill(kPi / 2);
    return s;
}

CharacterHom random_hom(std::mt19937_64& rng) {
    CharacterHom h;
    std::uniform_real_distribution<double> r(0.5, 2.0), a(0, 2 * kPi);
    for (int k = 0; k < 6; ++k) h.base[edge_aff(k)] = std::polar(r(rng), a(rng));
    return h;
}

// Face perimeters and cycle sums straight from the lengths.
std::array<double, 8> sums(const std::array<double, 6>& x) {
    auto e = [&](int i, int j) { return x[edge_slot(i, j)]; };
    return {0,
            e(0, 1) + e(1, 2) + e(0, 2),
            e(0, 1) + e(1, 3) + e(0, 3),
            e(0, 2) + e(2, 3) + e(0, 3),
            e(1, 2) + e(2, 3) + e(1, 3),
            e(0, 1) + e(1, 2) + e(2, 3) + e(0, 3),
            e(0, 2) + e(1, 2) + e(1, 3) + e(0, 3),
            e(0, 1) + e(1, 3) + e(2, 3) + e(0, 2)};
}

}  // namespace

TEST_CASE("configurations from metric data match the character values") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 10, 20)) {
            MarkedTetra T = from_metric(s);
            auto pi = config_metric(s, ConfigKind::Pi).values();
            auto om = config_metric(s, ConfigKind::Omega).values();
            auto lv = config_from_hom(length_function(T)).values();
            auto av = config_from_hom(angle_function(T)).values();
            auto ls = sums(s.lengths);
            auto alpha = metric_angles_oracle(s);
            auto as = sums(alpha);
            // Ω faces use the three edges at the opposite vertex, less π
            for (int f = 0; f < 4; ++f) {
                int v = 3 - f;
                as[1 + f] = -std::numbers::pi;
                for (int w = 0; w < 4; ++w)
                    if (w != v) as[1 + f] += alpha[edge_slot(v, w)];
            }
            for (int i = 0; i < 8; ++i) {
                cplx p = g == Geometry::Hyperbolic ? cplx(std::exp(ls[i])) : std::polar(1.0, ls[i]);
                CHECK(rel(pi[i], p) < 1e-12);
                CHECK(rel(om[i], std::polar(1.0, as[i])) < 1e-12);
                CHECK(rel(lv[i], pi[i]) < 1e-8);
                CHECK(rel(av[i], std::conj(om[i])) < 1e-8);
            }
        }
}

TEST_CASE("Cho-Kim function: zeros, poles and its level set at 1") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        CharacterHom h = random_hom(rng);
        CKFn f = ck_from_config(config_from_hom(h));
        for (cplx z : f.zeros) CHECK(std::abs(evaluate_ck(f, z)) < 1e-9);
        CHECK(rel(f.poles[0], 1.0) < 1e-15);
        // equal products of zeros and poles: CK(0) = 1, and CK(t) -> 1 at infinity
        CHECK(rel(evaluate_ck(f, 0.0), 1.0) < 1e-9);
        CHECK(rel(evaluate_ck(f, 1e8), 1.0) < 1e-6);
        PrincipalPair p = principal_parameters(f);
        CHECK(rel(evaluate_ck(f, p.p1), 1.0) < 1e-8);
        CHECK(rel(evaluate_ck(f, p.p2), 1.0) < 1e-8);
        // the quadratic against direct polynomial evaluation
        auto [a, b, c] = principal_quadratic(f);
        cplx x = rand_c(rng);
        cplx num = 1, den = x - 1.0;
        for (int i = 0; i < 4; ++i) num *= x - f.zeros[i];
        for (int i = 1; i < 4; ++i) den *= x - f.poles[i];
        CHECK(rel((num - den) / x, a * x * x + b * x + c) < 1e-9);
    }
}

TEST_CASE("zero-pole collisions are rejected") {
    Config8 c = Config8::from_values({1, 2, 3, 4, 5, 2, 7, 8});
    CHECK_THROWS_AS(ck_from_config(c), Error);
}

TEST_CASE("discriminant equals 16 (prod a)^2 det on random half-values") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        CharacterHom h = random_hom(rng);
        cplx prod = 1;
        for (int k = 0; k < 6; ++k) prod *= h.base[edge_aff(k)];
        cplx disc = principal_discriminant(ck_from_config(config_from_hom(h)));
        CHECK(rel(disc, 16.0 * prod * prod * det_L(h)) < 1e-8);
    }
}

TEST_CASE("discriminant identity in exact arithmetic") {
    ExactCheck e = prop313_exact({2, 3, -1, 5, 2, 7});
    CHECK(e.equal);
    CHECK(e.lhs == "113112000");
    for (auto a : {std::array<long long, 6>{1, 2, 3, 4, 5, 6}, {-2, 3, 5, -7, 11, 13}, {1, 1, 2, 1, 3, 1}}) {
        ExactCheck x = prop313_exact(a);
        CHECK(x.equal);
        CHECK(x.lhs == x.rhs);
    }
    CHECK_THROWS_AS(prop313_exact({0, 1, 2, 3, 4, 5}), Error);
}

TEST_CASE("psi_from_pair normalizes the principal pair") {
    cplx p1(0.3, 1.2), p2(-2.0, 0.5);
    MobiusMap m = psi_from_pair(p1, p2);
    CHECK(std::abs(m(p1)) < 1e-12);
    CHECK(m(P1::finite(p2)).is_infinite());
    CHECK(rel(m(1.0), 1.0) < 1e-12);
}

TEST_CASE("psi: unique verifying order, composition and level sets") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 15, 23)) {
            MarkedTetra T = from_metric(s);
            CKFn L = ck_from_config(config_from_hom(length_function(T)));
            CKFn A = ck_from_config(config_from_hom(angle_function(T)));
            PsiResult r = psi(L, A);
            CHECK(r.verifying_orders == 1);
            std::mt19937_64 rng(24);
            for (int t = 0; t < 5; ++t) {
                cplx x = rand_c(rng);
                CHECK(rel(evaluate_ck(L, x), evaluate_ck(A, r.psi(x))) < 1e-7);
            }
            // the level set {0, ∞, p1, p2} of CK^L goes onto that of CK^A
            PrincipalPair pl = principal_parameters(L), pa = principal_parameters(A);
            std::array<P1, 4> src{P1::finite(0), P1::infinity(), P1::finite(pl.p1), P1::finite(pl.p2)};
            std::array<P1, 4> dst{P1::finite(0), P1::infinity(), P1::finite(pa.p1), P1::finite(pa.p2)};
            for (const P1& x : src) {
                double best = 1.0;
                for (const P1& y : dst) best = std::min(best, chordal(r.psi(x), y));
                CHECK(best < 1e-7);
            }
            CHECK(std::abs(r.psi(r.order.p1)) < 1e-9);
            CHECK(r.psi(P1::finite(r.order.p2)).is_infinite(1e-9));
            PrincipalPair rule = ordered_principal_pair(L, g);
            CHECK(rel(rule.p1, r.order.p1) < 1e-8);
        }
}

TEST_CASE("psi never intertwines a function with itself") {
    // ψ sends a principal parameter to 0, so it cannot be the identity
    std::mt19937_64 rng(25);
    CKFn f = ck_from_config(config_from_hom(random_hom(rng)));
    CHECK_THROWS_AS(psi(f, f), Error);
}

TEST_CASE("all-right spherical tetrahedron with orientation bit 1") {
    MarkedTetra T = from_metric(all_right(), OrientationChoice::One);
    CKFn L = ck_from_config(config_from_hom(length_function(T)));
    CKFn A = ck_from_config(config_from_hom(angle_function(T)));
    for (cplx z : A.zeros) CHECK(std::abs(z - I) < 1e-12);
    for (cplx p : A.poles) CHECK(std::abs(p - 1.0) < 1e-12);
    for (cplx z : L.zeros) CHECK(std::abs(z + I) < 1e-12);
    PrincipalPair pa = principal_parameters(A);
    cplx a(1, 1), b(0.5, 0.5);
    CHECK(std::min(std::abs(pa.p1 - a) + std::abs(pa.p2 - b), std::abs(pa.p1 - b) + std::abs(pa.p2 - a)) < 1e-12);
    // ψ is the inverse of t -> (t(1-i) - 1)/(t - (1+i))
    PsiResult r = psi(L, A);
    MobiusMap printed;
    printed.m << 1.0 - I, -1.0, 1.0, -(1.0 + I);
    CHECK(r.psi.equals(printed.inverse(), 1e-10));
    CHECK_FALSE(r.psi.equals(printed, 1e-3));
}

TEST_CASE("solver against the cofactor oracle") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 20, 26)) {
            Solution sol = solve_angles(s);
            auto o = metric_angles_oracle(s);
            CHECK(sol.generic);
            CHECK(sol.surviving_assignments == 1);
            for (int k = 0; k < 6; ++k) CHECK(std::abs(sol.angles[k] - o[k]) < 1e-7);
        }
    MetricSpec h{Geometry::Hyperbolic, {1, 1.2, 1.4, 1.1, 1.3, 1.5}};
    Solution sol = solve_angles(h);
    auto o = metric_angles_oracle(h);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(sol.angles[k] - o[k]) < 1e-7);
}

TEST_CASE("solver on the all-right spherical tetrahedron") {
    Solution sol = solve_angles(all_right());
    CHECK_FALSE(sol.generic);
    for (double a : sol.angles) CHECK(std::abs(a - kPi / 2) < 1e-9);
}

TEST_CASE("Regge transform formulas") {
    auto r = regge_transform({1, 2, 3, 4, 5, 6});
    CHECK(r == std::array<double, 6>{1, 5, 4, 3, 2, 6});
    std::array<double, 6> eq;
    eq.fill(0.7);
    CHECK(regge_transform(eq) == eq);
    std::mt19937_64 rng(27);
    std::uniform_real_distribution<double> u(0, 3);
    for (int t = 0; t < 100; ++t) {
        std::array<double, 6> x;
        for (auto& v : x) v = u(rng);
        auto y = regge_transform(regge_transform(x, ReggeKind::Angles), ReggeKind::Angles);
        for (int k = 0; k < 6; ++k) CHECK(y[k] == doctest::Approx(x[k]).epsilon(1e-12));
    }
}

TEST_CASE("projective equivalence recovers a Möbius map and rejects permutations") {
    std::mt19937_64 rng(28);
    for (int t = 0; t < 20; ++t) {
        std::array<cplx, 8> v;
        for (auto& x : v) x = rand_c(rng);
        Config8 c = Config8::from_values(v);
        MobiusMap m = testutil::rand_mobius(rng);
        Equivalence e = projective_equivalence(c, apply(m, c));
        CHECK(e.residual < 1e-9);
        CHECK(e.m.equals(m, 1e-7));
        std::swap(v[2], v[6]);
        CHECK_THROWS_AS(projective_equivalence(c, Config8::from_values(v)), Error);
    }
    Config8 flat = Config8::from_values({1, 1, 1, 1, 2, 2, 2, 2});
    CHECK_THROWS_AS(projective_equivalence(flat, flat), Error);
}

TEST_CASE("cross-ratio invariant: Möbius invariance and degeneracy") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        std::array<cplx, 8> v;
        for (auto& x : v) x = rand_c(rng);
        Config8 c = Config8::from_values(v);
        MobiusMap m = testutil::rand_mobius(rng);
        CHECK(rel(cross_ratio_invariant(c), cross_ratio_invariant(apply(m, c))) < 1e-9);
    }
    CHECK_THROWS_AS(cross_ratio_invariant(config_metric(all_right(), ConfigKind::Pi)), Error);
    for (const auto& s : random_specs(Geometry::Spherical, 10, 30)) {
        CHECK(rel(cross_ratio_invariant(config_metric(s, ConfigKind::Pi)),
                  cross_ratio_invariant(config_metric(s, ConfigKind::Omega))) < 1e-8);
        CHECK(projective_equivalence(config_metric(s, ConfigKind::Pi), config_metric(s, ConfigKind::Omega)).residual <
              1e-7);
    }
}
