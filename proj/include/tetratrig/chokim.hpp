#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tetratrig/tetra.hpp"

namespace tetratrig {

// (basepoint, faces 123,124,134,234, cycles 1234,1324,1243)
struct Config8 {
    std::array<P1, 8> z;

    static Config8 from_values(const std::array<cplx, 8>& v);
    std::array<cplx, 8> values() const;  // throws at infinite entries
};

Config8 apply(const MobiusMap& m, const Config8& c);

enum class ConfigKind { Pi, Omega };

// Pi uses the lengths; Omega uses `angles` (edge-slot order) or the cofactor oracle.
Config8 config_metric(const MetricSpec& spec, ConfigKind kind,
                      const std::optional<std::array<double, 6>>& angles = std::nullopt);
Config8 config_from_hom(const CharacterHom& h);

// Degree-4 rational function Π(t - zeros) / Π(t - poles).
struct CKFn {
    std::array<cplx, 4> zeros{};
    std::array<cplx, 4> poles{};
};

CKFn ck_from_config(const Config8& c, double tol = 1e-9);
cplx evaluate_ck(const CKFn& f, cplx t);

struct PrincipalPair {
    cplx p1, p2;
};

// Coefficients (a, b, c) of (num - den)/t = a t^2 + b t + c, by compensated sums.
std::array<cplx, 3> principal_quadratic(const CKFn& f);
cplx principal_discriminant(const CKFn& f);
PrincipalPair principal_parameters(const CKFn& f, double tol = 1e-12);

// t -> (t - p1)(1 - p2) / ((t - p2)(1 - p1))
MobiusMap psi_from_pair(cplx p1, cplx p2);

struct PsiResult {
    MobiusMap psi;
    PrincipalPair order;           // the verifying order
    int verifying_orders = 0;      // 1 on generic input
    std::array<double, 2> residual{};  // probe residual of (p1,p2) and (p2,p1)
};

// ψ with CK^L = CK^A ∘ ψ; throws NoVerifyingOrder.
PsiResult psi(const CKFn& ckL, const CKFn& ckA, double tol = 1e-6);

// Orders the L-side principal pair without reference to A: hyperbolic puts the
// parameter with negative imaginary part first, spherical the larger modulus first.
PrincipalPair ordered_principal_pair(const CKFn& ckL, Geometry g);

struct Solution {
    std::array<double, 6> angles{};  // edge-slot order, in (0, pi)
    MobiusMap psi;
    PrincipalPair principal;
    CKFn ckL, ckA;
    bool generic = true;
    int surviving_assignments = 0;
};

Solution solve_angles(const MetricSpec& spec);

enum class ReggeKind { Lengths, Angles };
std::array<double, 6> regge_transform(const std::array<double, 6>& x, ReggeKind kind = ReggeKind::Lengths);

struct Equivalence {
    MobiusMap m;
    double residual = 0.0;  // worst chordal distance over the eight entries
};

Equivalence projective_equivalence(const Config8& c1, const Config8& c2, double tol = 1e-7);
cplx cross_ratio_invariant(const Config8& c, double tol = 1e-9);

// Exact check of disc = 16 (Π a)^2 det at integer half-values.
struct ExactCheck {
    std::string lhs, rhs;
    bool equal = false;
};
ExactCheck prop313_exact(const std::array<long long, 6>& a);

}  // namespace tetratrig
