#include "tetratrig/chokim.hpp"
#include "tetratrig/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace tetratrig {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier summation, real and imaginary parts separately.
cplx compensated_sum(const std::vector<cplx>& terms) {
    auto run = [&](auto part) {
        double s = 0.0, c = 0.0;
        for (const auto& t : terms) {
            double x = part(t);
            double u = s + x;
            if (std::abs(s) >= std::abs(x))
                c += (s - u) + x;
            else
                c += (x - u) + s;
            s = u;
        }
        return s + c;
    };
    return {run([](cplx z) { return z.real(); }), run([](cplx z) { return z.imag(); })};
}

// Terms of the k-th elementary symmetric polynomial.
std::vector<cplx> sym_terms(const std::array<cplx, 4>& z, int k) {
    std::vector<cplx> out;
    for (unsigned m = 0; m < 16; ++m) {
        if (std::popcount(m) != k) continue;
        cplx p = 1.0;
        for (int i = 0; i < 4; ++i)
            if (m >> i & 1) p *= z[i];
        out.push_back(p);
    }
    return out;
}

cplx sym_difference(const CKFn& f, int k) {
    auto t = sym_terms(f.zeros, k);
    for (cplx x : sym_terms(f.poles, k)) t.push_back(-x);
    return compensated_sum(t);
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double probe_residual(const CKFn& ckL, const CKFn& ckA, const MobiusMap& m) {
    static const std::array<cplx, 7> probes{cplx(0.31, 0.22), cplx(1.7, -0.4), cplx(-0.5, 1.1), cplx(2.2, 0.9),
                                            cplx(-1.3, -0.7), cplx(0.6, -1.4), cplx(3.1, 0.05)};
    double worst = 0.0;
    for (cplx t : probes) worst = std::max(worst, rel_err(evaluate_ck(ckA, m(t)), evaluate_ck(ckL, t)));
    return worst;
}

struct Recovery {
    int f1, f2, c;
};

// A(e) = A_f1 A_f2 / A_c for each edge slot, found on the lattice.
const std::array<Recovery, 6>& recovery_table() {
    static const std::array<Recovery, 6> table = [] {
        std::array<Recovery, 6> out{};
        const auto& fa = face_vectors_A();
        const auto& cy = cycle_vectors();
        for (int k = 0; k < 6; ++k) {
            bool found = false;
            LatticeVec e = LatticeVec::unit(edge_aff(k));
            for (int a = 0; a < 4 && !found; ++a)
                for (int b = a + 1; b < 4 && !found; ++b)
                    for (int c = 0; c < 3 && !found; ++c) {
                        LatticeVec v = fa[a] + fa[b] - cy[c];
                        for (int sI : {0, 1, -1})
                            if (v == e + LatticeVec::unit(kI) * sI) {
                                out[k] = {a, b, c};
                                found = true;
                            }
                    }
            if (!found) throw Error(ErrorKind::ConsistencyFailure, "no recovery relation for an edge");
        }
        return out;
    }();
    return table;
}

}  // namespace

Config8 Config8::from_values(const std::array<cplx, 8>& v) {
    Config8 c;
    for (int i = 0; i < 8; ++i) c.z[i] = P1::finite(v[i]);
    return c;
}

std::array<cplx, 8> Config8::values() const {
    std::array<cplx, 8> v;
    for (int i = 0; i < 8; ++i) v[i] = z[i].value();
    return v;
}

Config8 apply(const MobiusMap& m, const Config8& c) {
    Config8 out;
    for (int i = 0; i < 8; ++i) out.z[i] = m(c.z[i]);
    return out;
}

Config8 config_metric(const MetricSpec& spec, ConfigKind kind, const std::optional<std::array<double, 6>>& angles) {
    validate_metric(spec);
    std::array<double, 8> x{};
    if (kind == ConfigKind::Pi) {
        const auto& l = spec.lengths;  // 12,13,14,23,24,34
        x = {0.0,
             l[0] + l[1] + l[3],
             l[0] + l[2] + l[4],
             l[1] + l[2] + l[5],
             l[3] + l[4] + l[5],
             l[0] + l[3] + l[5] + l[2],
             l[1] + l[3] + l[4] + l[2],
             l[0] + l[4] + l[5] + l[1]};
    } else {
        auto a = angles ? *angles : metric_angles_oracle(spec);
        x = {0.0,
             a[2] + a[4] + a[5] - kPi,
             a[1] + a[3] + a[5] - kPi,
             a[0] + a[3] + a[4] - kPi,
             a[0] + a[1] + a[2] - kPi,
             a[0] + a[3] + a[5] + a[2],
             a[1] + a[3] + a[4] + a[2],
             a[0] + a[4] + a[5] + a[1]};
    }
    bool imaginary = kind == ConfigKind::Omega || spec.geometry == Geometry::Spherical;
    std::array<cplx, 8> v;
    for (int i = 0; i < 8; ++i) v[i] = imaginary ? std::polar(1.0, x[i]) : cplx(std::exp(x[i]));
    return Config8::from_values(v);
}

Config8 config_from_hom(const CharacterHom& h) {
    const auto& faces = h.tag == SubSystem::E7A ? face_vectors_A() : face_vectors_L();
    std::array<cplx, 8> v;
    v[0] = 1.0;
    for (int i = 0; i < 4; ++i) v[1 + i] = h(faces[i]);
    for (int i = 0; i < 3; ++i) v[5 + i] = h(cycle_vectors()[i]);
    return Config8::from_values(v);
}

CKFn ck_from_config(const Config8& c, double tol) {
    auto v = c.values();
    CKFn f;
    for (int i = 0; i < 4; ++i) f.zeros[i] = v[1 + i];
    f.poles = {v[0], v[5], v[6], v[7]};
    for (cplx z : f.zeros)
        for (cplx p : f.poles)
            if (chordal(P1::finite(z), P1::finite(p)) < tol)
                throw Error(ErrorKind::ZeroPoleCollision, "a zero coincides with a pole");
    return f;
}

cplx evaluate_ck(const CKFn& f, cplx t) {
    cplx r = 1.0;
    for (int i = 0; i < 4; ++i) r *= (t - f.zeros[i]) / (t - f.poles[i]);
    return r;
}

std::array<cplx, 3> principal_quadratic(const CKFn& f) {
    // Π(t - z) = t^4 - σ1 t^3 + σ2 t^2 - σ3 t + σ4
    return {-sym_difference(f, 1), sym_difference(f, 2), -sym_difference(f, 3)};
}

cplx principal_discriminant(const CKFn& f) {
    auto [a, b, c] = principal_quadratic(f);
    return b * b - 4.0 * a * c;
}

PrincipalPair principal_parameters(const CKFn& f, double tol) {
    auto [a, b, c] = principal_quadratic(f);
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    cplx c0 = sym_difference(f, 4);
    if (std::abs(c0) > 1e-8 * std::max(1.0, scale))
        throw Error(ErrorKind::DegenerateQuadratic, "num - den has no root at 0");
    if (scale == 0.0 || std::abs(a) <= tol * scale || std::abs(c) <= tol * scale)
        throw Error(ErrorKind::DegenerateQuadratic, "a principal parameter sits at 0 or infinity");
    cplx disc = b * b - 4.0 * a * c;
    if (std::abs(disc) <= tol * scale * scale)
        throw Error(ErrorKind::DegenerateQuadratic, "principal parameters coincide");
    cplx sq = std::sqrt(disc);
    if ((std::conj(b) * sq).real() < 0) sq = -sq;
    cplx q = -0.5 * (b + sq);
    return {q / a, c / q};
}

MobiusMap psi_from_pair(cplx p1, cplx p2) {
    MobiusMap m;
    m.m << (1.0 - p2), -p1 * (1.0 - p2), (1.0 - p1), -p2 * (1.0 - p1);
    return m;
}

PsiResult psi(const CKFn& ckL, const CKFn& ckA, double tol) {
    PrincipalPair p = principal_parameters(ckL);
    PsiResult out;
    MobiusMap m12 = psi_from_pair(p.p1, p.p2), m21 = psi_from_pair(p.p2, p.p1);
    out.residual = {probe_residual(ckL, ckA, m12), probe_residual(ckL, ckA, m21)};
    bool ok12 = out.residual[0] < tol, ok21 = out.residual[1] < tol;
    out.verifying_orders = int(ok12) + int(ok21);
    if (!ok12 && !ok21)
        throw Error(ErrorKind::NoVerifyingOrder, "neither order of the principal parameters intertwines");
    bool first = ok12 && (!ok21 || out.residual[0] <= out.residual[1]);
    out.psi = first ? m12 : m21;
    out.order = first ? p : PrincipalPair{p.p2, p.p1};
    return out;
}

PrincipalPair ordered_principal_pair(const CKFn& ckL, Geometry g) {
    PrincipalPair p = principal_parameters(ckL);
    bool swap = g == Geometry::Hyperbolic ? p.p1.imag() > p.p2.imag() : std::abs(p.p1) < std::abs(p.p2);
    if (swap) std::swap(p.p1, p.p2);
    return p;
}

Solution solve_angles(const MetricSpec& spec) {
    MarkedTetra T = from_metric(spec);
    CharacterHom L = length_function(T);
    Solution sol;
    sol.generic = is_generic(L);  // reported only; degenerate data fails later with a named stage

    Config8 cL = config_from_hom(L);
    sol.ckL = ck_from_config(cL);
    sol.principal = ordered_principal_pair(sol.ckL, spec.geometry);
    sol.psi = psi_from_pair(sol.principal.p1, sol.principal.p2);

    auto lv = cL.values();
    std::array<cplx, 8> moved;
    for (int i = 0; i < 8; ++i) moved[i] = sol.psi(lv[i]);
    for (int i = 0; i < 4; ++i) sol.ckA.zeros[i] = moved[1 + i];
    sol.ckA.poles = {moved[0], moved[5], moved[6], moved[7]};

    // Read the zeros and poles of CK^A as unlabeled sets and search for the labelling.
    auto by_value = [](cplx a, cplx b) { return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag()); };
    std::array<cplx, 4> zs = sol.ckA.zeros;
    std::sort(zs.begin(), zs.end(), by_value);
    std::array<cplx, 4> ps = sol.ckA.poles;
    auto base = std::min_element(ps.begin(), ps.end(), [](cplx a, cplx b) { return std::abs(a - 1.0) < std::abs(b - 1.0); });
    std::iter_swap(ps.begin(), base);
    std::array<cplx, 3> cs{ps[1], ps[2], ps[3]};
    std::sort(cs.begin(), cs.end(), by_value);

    const auto& rec = recovery_table();
    constexpr double kMatch = 1e-6;
    std::vector<std::array<cplx, 6>> survivors;
    std::array<int, 4> zp{0, 1, 2, 3};
    do {
        bool zok = true;
        for (int i = 0; i < 4 && zok; ++i) zok = rel_err(zs[zp[i]], moved[1 + i]) < kMatch;
        if (!zok) continue;
        std::array<int, 3> cp{0, 1, 2};
        do {
            bool cok = true;
            for (int i = 0; i < 3 && cok; ++i) cok = rel_err(cs[cp[i]], moved[5 + i]) < kMatch;
            if (!cok) continue;
            std::array<cplx, 6> A;
            bool unit = true;
            for (int k = 0; k < 6; ++k) {
                A[k] = zs[zp[rec[k].f1]] * zs[zp[rec[k].f2]] / cs[cp[rec[k].c]];
                if (std::abs(std::abs(A[k]) - 1.0) > kMatch) unit = false;
            }
            if (!unit) continue;
            bool dup = std::any_of(survivors.begin(), survivors.end(), [&](const auto& s) {
                for (int k = 0; k < 6; ++k)
                    if (std::abs(s[k] - A[k]) > kMatch) return false;
                return true;
            });
            if (!dup) survivors.push_back(A);
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(zp.begin(), zp.end()));

    sol.surviving_assignments = int(survivors.size());
    if (survivors.empty())
        throw Error(ErrorKind::NoConsistentAssignment, "no labelling of CK^A zeros and poles is consistent");
    if (survivors.size() > 1) throw Error(ErrorKind::AssignmentAmbiguous, "several labellings survive");

    for (int k = 0; k < 6; ++k) {
        double x = std::fmod(-0.5 * std::arg(survivors[0][k]), kPi);
        if (x < 0) x += kPi;
        sol.angles[k] = x;
    }
    return sol;
}

std::array<double, 6> regge_transform(const std::array<double, 6>& x, ReggeKind) {
    // Fixes 12 and 34; each of 13,14,23,24 becomes the semi-sum of the other three minus itself.
    std::array<double, 6> y = x;
    double s = x[1] + x[2] + x[3] + x[4];
    for (int k : {1, 2, 3, 4}) y[k] = 0.5 * s - x[k];
    return y;
}

Equivalence projective_equivalence(const Config8& c1, const Config8& c2, double tol) {
    double best = 0.0;
    std::array<int, 3> anchor{-1, -1, -1};
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c) {
                double spread = std::min({chordal(c1.z[a], c1.z[b]), chordal(c1.z[a], c1.z[c]),
                                          chordal(c1.z[b], c1.z[c]), chordal(c2.z[a], c2.z[b]),
                                          chordal(c2.z[a], c2.z[c]), chordal(c2.z[b], c2.z[c])});
                if (spread > best) {
                    best = spread;
                    anchor = {a, b, c};
                }
            }
    if (best < 1e-6) throw Error(ErrorKind::TooDegenerate, "no three distinct entries to anchor a Möbius map");
    Equivalence eq;
    eq.m = mobius_through({c1.z[anchor[0]], c1.z[anchor[1]], c1.z[anchor[2]]},
                          {c2.z[anchor[0]], c2.z[anchor[1]], c2.z[anchor[2]]});
    for (int i = 0; i < 8; ++i) eq.residual = std::max(eq.residual, chordal(eq.m(c1.z[i]), c2.z[i]));
    if (eq.residual > tol)
        throw Error(ErrorKind::NotEquivalent, "configurations differ by " + std::to_string(eq.residual));
    return eq;
}

cplx cross_ratio_invariant(const Config8& c, double tol) {
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (chordal(c.z[i], c.z[j]) < tol)
                throw Error(ErrorKind::DegenerateConfiguration, "face values coincide");
    return cross_ratio(c.z[1], c.z[2], c.z[3], c.z[4]).value();
}

ExactCheck prop313_exact(const std::array<long long, 6>& a) {
    for (long long x : a)
        if (x == 0) throw Error(ErrorKind::DegenerateConfiguration, "half-values must be nonzero");
    // faces 123,124,134,234 and cycles 1234,1324,1243 as products of half-values
    using I = __int128;
    std::array<I, 4> z{I(a[0]) * a[1] * a[3], I(a[0]) * a[2] * a[4], I(a[1]) * a[2] * a[5], I(a[3]) * a[4] * a[5]};
    std::array<I, 4> p{1, I(a[0]) * a[3] * a[5] * a[2], I(a[1]) * a[3] * a[4] * a[2], I(a[0]) * a[4] * a[5] * a[1]};
    auto sym = [](const std::array<I, 4>& v, int k) {
        I s = 0;
        for (unsigned m = 0; m < 16; ++m) {
            if (std::popcount(m) != k) continue;
            I t = 1;
            for (int i = 0; i < 4; ++i)
                if (m >> i & 1) t *= v[i];
            s += t;
        }
        return s;
    };
    I qa = -(sym(z, 1) - sym(p, 1)), qb = sym(z, 2) - sym(p, 2), qc = -(sym(z, 3) - sym(p, 3));
    Rational lhs(qb * qb - 4 * qa * qc);

    std::array<std::array<Rational, 4>, 4> m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(i == j ? 1 : 0);
    for (int k = 0; k < 6; ++k) {
        Rational c(I(a[k]) * a[k] + 1, 2 * I(a[k]));
        m[kEdgeVerts[k][0]][kEdgeVerts[k][1]] = c;
        m[kEdgeVerts[k][1]][kEdgeVerts[k][0]] = c;
    }
    Rational det;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j];
        Rational t(inv % 2 ? -1 : 1);
        for (int i = 0; i < 4; ++i) t = t * m[i][perm[i]];
        det = det + t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    I prod = 1;
    for (long long x : a) prod *= x;
    Rational rhs = Rational(16 * prod * prod) * det;

    return {lhs.str(), rhs.str(), lhs == rhs};
}

}  // namespace tetratrig
