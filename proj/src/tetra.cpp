#include "tetratrig/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tetratrig {

namespace {

constexpr std::array<std::array<int, 3>, 4> kFaces{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

cplx ipow(cplx b, int e) {
    cplx r = 1.0;
    bool inv = e < 0;
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return inv ? 1.0 / r : r;
}

double rel_err(cplx a, cplx b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

int perm_parity(const std::array<int, 4>& p) {
    int inv = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2;
}

Mat4 planes_matrix(const std::array<PlaneP3, 4>& H) {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.row(i) = normalized(H[i]).transpose();
    return m;
}

MarkedTetra assemble_with_points(const QuadricP3& Q, const std::array<PlaneP3, 4>& H, int orientation,
                                 const std::array<std::array<PointP3, 4>, 4>& E) {
    MarkedTetra T;
    T.Q = Q;
    for (int i = 0; i < 4; ++i) T.H[i] = normalized(H[i]);
    Mat4 hm = planes_matrix(T.H);
    if (std::abs(hm.determinant()) < 1e-12)
        throw Error(ErrorKind::DegenerateConfiguration, "planes not in general position");
    Mat4 av = hm.inverse();
    for (int i = 0; i < 4; ++i) {
        T.A[i] = normalized(av.col(i));
        if (Q.residual(T.A[i]) < 1e-10)
            throw Error(ErrorKind::DegenerateConfiguration, "vertex lies on the quadric");
    }
    T.orientation = orientation & 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) T.E[i][j] = normalized(E[i][j]);
    return T;
}

}  // namespace

const char* geometry_name(Geometry g) { return g == Geometry::Spherical ? "spherical" : "hyperbolic"; }

int edge_slot(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int k = 0; k < 6; ++k)
        if (kEdgeVerts[k][0] == i && kEdgeVerts[k][1] == j) return k;
    throw Error(ErrorKind::DegenerateConfiguration, "not an edge");
}

int edge_aff(int k) { return k + 1; }

std::array<int, 2> complement_pair(int i, int j) {
    std::array<int, 2> out{};
    int n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != i && v != j) out[n++] = v;
    return out;
}

Eigen::Matrix4d gram_matrix(const MetricSpec& spec) {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    for (int k = 0; k < 6; ++k) {
        double l = spec.lengths[k];
        double c = spec.geometry == Geometry::Hyperbolic ? std::cosh(l) : std::cos(l);
        g(kEdgeVerts[k][0], kEdgeVerts[k][1]) = c;
        g(kEdgeVerts[k][1], kEdgeVerts[k][0]) = c;
    }
    return g;
}

void validate_metric(const MetricSpec& spec) {
    for (double l : spec.lengths) {
        if (!std::isfinite(l) || l <= 0.0)
            throw Error(ErrorKind::NotRealizable, "edge lengths must be positive");
        if (spec.geometry == Geometry::Spherical && l >= M_PI)
            throw Error(ErrorKind::NotRealizable, "spherical edge length must be below pi");
    }
    Eigen::Matrix4d g = gram_matrix(spec);
    if (std::abs(g.determinant()) < 1e-10)
        throw Error(ErrorKind::NearDegenerate, "Gram determinant vanishes");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
    const auto& ev = es.eigenvalues();
    int pos = 0;
    for (int k = 0; k < 4; ++k) pos += ev(k) > 0;
    if (spec.geometry == Geometry::Spherical) {
        if (pos != 4) throw Error(ErrorKind::NotRealizable, "Gram matrix not positive definite");
    } else {
        if (pos != 1) throw Error(ErrorKind::NotRealizable, "Gram matrix signature is not (1,3)");
        // every face must be a hyperbolic triangle
        for (int k = 0; k < 4; ++k) {
            Eigen::Matrix3d m;
            int r = 0;
            for (int a = 0; a < 4; ++a) {
                if (a == k) continue;
                int c = 0;
                for (int b = 0; b < 4; ++b) {
                    if (b == k) continue;
                    m(r, c++) = g(a, b);
                }
                ++r;
            }
            if (m.determinant() <= 1e-12)
                throw Error(ErrorKind::NotRealizable, "degenerate or non-hyperbolic face");
        }
    }
}

bool is_realizable(const MetricSpec& spec) {
    try {
        validate_metric(spec);
        return true;
    } catch (const Error&) {
        return false;
    }
}

unsigned edge_order_bits(const MarkedTetra& T) {
    unsigned bits = 0;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        auto pts = line_quadric_intersection(T.edge_line(i, j), T.Q);
        if (wedge_distance(T.E[i][j], pts.second) < wedge_distance(T.E[i][j], pts.first)) bits |= 1u << k;
    }
    return bits;
}

MarkedTetra assemble_tetra(const QuadricP3& Q, const std::array<PlaneP3, 4>& H, int orientation,
                           unsigned order_bits) {
    Mat4 hm = planes_matrix(H);
    if (std::abs(hm.determinant()) < 1e-12)
        throw Error(ErrorKind::DegenerateConfiguration, "planes not in general position");
    Mat4 av = hm.inverse();
    std::array<std::array<PointP3, 4>, 4> E;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        auto pts = line_quadric_intersection(LineP3{av.col(i), av.col(j)}, Q);
        bool swap = (order_bits >> k) & 1;
        E[i][j] = swap ? pts.second : pts.first;
        E[j][i] = swap ? pts.first : pts.second;
    }
    return assemble_with_points(Q, H, orientation, E);
}

namespace {

// Vertex representatives realizing the Gram matrix and the quadric.
std::pair<Eigen::Matrix4d, Mat4> metric_model(const MetricSpec& spec) {
    validate_metric(spec);
    Eigen::Matrix4d g = gram_matrix(spec);
    Eigen::Matrix4d v;
    Mat4 q = Mat4::Identity();
    if (spec.geometry == Geometry::Hyperbolic) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
        Eigen::Vector4d ev = es.eigenvalues();
        Eigen::Matrix4d u = es.eigenvectors();
        // eigenvalues ascending: the single positive one is last
        std::array<int, 4> order{3, 0, 1, 2};
        for (int r = 0; r < 4; ++r)
            v.row(r) = std::sqrt(std::abs(ev(order[r]))) * u.col(order[r]).transpose();
        if (v(0, 0) < 0) v.row(0) *= -1.0;
        q(1, 1) = q(2, 2) = q(3, 3) = -1.0;
    } else {
        Eigen::LLT<Eigen::Matrix4d> llt(g);
        v = llt.matrixL().transpose();
    }
    return {v, q};
}

}  // namespace

int canonical_orientation(const MetricSpec& spec) {
    auto [v, q] = metric_model(spec);
    double d = v.determinant();
    return spec.geometry == Geometry::Hyperbolic ? (d > 0 ? 1 : 0) : (d < 0 ? 1 : 0);
}

MarkedTetra from_metric(const MetricSpec& spec, OrientationChoice choice) {
    auto [v, qm] = metric_model(spec);
    Eigen::Matrix4d g = gram_matrix(spec);
    int orientation = 0;
    if (choice == OrientationChoice::Canonical) {
        double d = v.determinant();
        orientation = spec.geometry == Geometry::Hyperbolic ? (d > 0 ? 1 : 0) : (d < 0 ? 1 : 0);
    } else {
        orientation = choice == OrientationChoice::One ? 1 : 0;
    }
    Mat4 vc = v.cast<cplx>();
    std::array<PlaneP3, 4> H;
    Mat4 hinv = vc.inverse();
    for (int i = 0; i < 4; ++i) H[i] = hinv.row(i).transpose();
    // E_ij = z A_i + A_j with z a root of z^2 + 2 g_ij z + 1 = 0:
    // hyperbolic takes |z| < 1 so [A_i,E_ij,A_j,E_ji] = e^{2l}; spherical takes Im z > 0,
    // which is the principal-branch condition for l < pi/2 and its continuation beyond.
    std::array<std::array<PointP3, 4>, 4> E;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        double gij = g(i, j);
        cplx z, zo;
        if (spec.geometry == Geometry::Hyperbolic) {
            double s = std::sqrt(gij * gij - 1.0);
            z = -gij + s;
            zo = -gij - s;
        } else {
            double s = std::sqrt(std::max(0.0, 1.0 - gij * gij));
            z = cplx(-gij, s);
            zo = cplx(-gij, -s);
        }
        E[i][j] = z * vc.col(i) + vc.col(j);
        E[j][i] = zo * vc.col(i) + vc.col(j);
    }
    return assemble_with_points(QuadricP3(qm), H, orientation, E);
}

std::array<std::array<PointP3, 4>, 4> dual_edge_points(const MarkedTetra& T) {
    std::array<std::array<PointP3, 4>, 4> Ep;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        Rulings ri = rulings_through(T.E[i][j], T.Q, T.orientation);
        Rulings rj = rulings_through(T.E[j][i], T.Q, T.orientation);
        Ep[i][j] = meet(ri.left, rj.right);
        Ep[j][i] = meet(ri.right, rj.left);
    }
    return Ep;
}

MarkedTetra dual_tetra(const MarkedTetra& T) {
    auto Ep = dual_edge_points(T);
    std::array<PlaneP3, 4> Hd;
    for (int i = 0; i < 4; ++i) Hd[i] = polar_dual_point(T.A[i], T.Q);
    std::array<std::array<PointP3, 4>, 4> Ed;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        auto [a, b] = complement_pair(i, j);
        bool even = perm_parity({i, j, a, b}) == 0;
        Ed[a][b] = even ? Ep[i][j] : Ep[j][i];
        Ed[b][a] = even ? Ep[j][i] : Ep[i][j];
    }
    return assemble_with_points(T.Q, Hd, T.orientation, Ed);
}

cplx edge_cross_ratio(const MarkedTetra& T, int i, int j) {
    P1 c = cross_ratio_on_line(T.A[i], T.E[i][j], T.A[j], T.E[j][i], T.edge_line(i, j), 1e-6);
    return c.value();
}

cplx face_value(const MarkedTetra& T, int i, int j, int k) {
    PointP3 x = meet(T.edge_line(i, k), LineP3{T.E[i][j], T.E[j][k]});
    return cross_ratio_on_line(T.A[k], T.E[k][i], T.A[i], x, T.edge_line(i, k), 1e-6).value();
}

cplx face_value_alt(const MarkedTetra& T, int i, int j, int k) {
    PointP3 x = meet(T.edge_line(j, k), LineP3{T.E[i][j], T.E[j][k]});
    return cross_ratio_on_line(T.A[k], T.E[k][i], T.A[i], x, T.edge_line(i, k), 1e-6).value();
}

namespace {

struct SignSolution {
    std::array<cplx, 6> a{};
    double residual = std::numeric_limits<double>::infinity();
};

// Chooses signs of the square roots so that every face product matches.
SignSolution solve_signs(const std::array<cplx, 6>& squares, const std::array<cplx, 4>& faces) {
    std::array<cplx, 6> root;
    for (int k = 0; k < 6; ++k) root[k] = std::sqrt(squares[k]);
    SignSolution best;
    for (int pattern = 0; pattern < 64; ++pattern) {
        std::array<cplx, 6> a;
        for (int k = 0; k < 6; ++k) a[k] = (pattern >> k) & 1 ? -root[k] : root[k];
        double worst = 0.0;
        for (int f = 0; f < 4; ++f) {
            auto [i, j, k] = kFaces[f];
            cplx prod = a[edge_slot(i, j)] * a[edge_slot(j, k)] * a[edge_slot(i, k)];
            worst = std::max(worst, rel_err(prod, faces[f]));
        }
        if (worst < best.residual) {
            best.residual = worst;
            best.a = a;
        }
    }
    return best;
}

}  // namespace

LiftData lift_data(const MarkedTetra& T) {
    std::array<cplx, 6> sq;
    for (int k = 0; k < 6; ++k) sq[k] = edge_cross_ratio(T, kEdgeVerts[k][0], kEdgeVerts[k][1]);
    std::array<cplx, 4> faces;
    for (int f = 0; f < 4; ++f) faces[f] = face_value(T, kFaces[f][0], kFaces[f][1], kFaces[f][2]);
    SignSolution s = solve_signs(sq, faces);
    if (s.residual > 1e-6)
        throw Error(ErrorKind::SignSystemInconsistent,
                    "no sign pattern satisfies the face identities (residual " + std::to_string(s.residual) + ")");
    return {s.a, s.residual};
}

cplx CharacterHom::eval_unchecked(const LatticeVec& v) const {
    cplx r = 1.0;
    for (int s = 0; s < 8; ++s)
        if (v.d[s]) r *= ipow(base[s], v.d[s]);
    return r;
}

cplx CharacterHom::operator()(const LatticeVec& v) const {
    if (!in_lattice(v) || !in_sublattice(v, tag))
        throw Error(ErrorKind::VectorNotInDomain, v.str());
    return eval_unchecked(v);
}

const std::array<LatticeVec, 4>& face_vectors_L() {
    static const std::array<LatticeVec, 4> f{
        LatticeVec::half({{k12, 1}, {k13, 1}, {k23, 1}, {kEmpty, 1}}),
        LatticeVec::half({{k12, 1}, {k14, 1}, {k24, 1}, {kEmpty, 1}}),
        LatticeVec::half({{k13, 1}, {k14, 1}, {k34, 1}, {kEmpty, 1}}),
        LatticeVec::half({{k23, 1}, {k24, 1}, {k34, 1}, {kEmpty, 1}})};
    return f;
}

const std::array<LatticeVec, 3>& cycle_vectors() {
    static const std::array<LatticeVec, 3> c{
        LatticeVec::half({{k12, 1}, {k14, 1}, {k23, 1}, {k34, 1}}),
        LatticeVec::half({{k13, 1}, {k14, 1}, {k23, 1}, {k24, 1}}),
        LatticeVec::half({{k12, 1}, {k13, 1}, {k24, 1}, {k34, 1}})};
    return c;
}

const std::array<LatticeVec, 4>& face_vectors_A() {
    static const std::array<LatticeVec, 4> f{duality_D(face_vectors_L()[0]), duality_D(face_vectors_L()[1]),
                                             duality_D(face_vectors_L()[2]), duality_D(face_vectors_L()[3])};
    return f;
}

CharacterHom CharacterHom::from_function(const std::function<cplx(const LatticeVec&)>& f, SubSystem tag,
                                         double tol) {
    if (tag == SubSystem::E7A) {
        CharacterHom l = from_function([&](const LatticeVec& v) { return f(duality_D(v)); }, SubSystem::E7L, tol);
        CharacterHom a;
        a.tag = SubSystem::E7A;
        for (int s = 0; s < 8; ++s) a.base[s] = l.base[aff_complement(s)];
        return a;
    }
    if (tag != SubSystem::E7L)
        throw Error(ErrorKind::VectorNotInDomain, "characters live on E7L or E7A");
    std::array<cplx, 6> sq;
    for (int k = 0; k < 6; ++k) sq[k] = f(LatticeVec::unit(edge_aff(k)));
    std::array<cplx, 4> faces;
    for (int i = 0; i < 4; ++i) faces[i] = f(face_vectors_L()[i]);
    SignSolution s = solve_signs(sq, faces);
    CharacterHom h;
    for (int k = 0; k < 6; ++k) h.base[edge_aff(k)] = s.a[k];
    double worst = 0.0;
    for (const auto& r : sub_roots(SubSystem::E7L)) worst = std::max(worst, rel_err(h(r), f(r)));
    if (worst > tol)
        throw Error(ErrorKind::SignSystemInconsistent,
                    "function is not a character on E7L (residual " + std::to_string(worst) + ")");
    return h;
}

CharacterHom CharacterHom::gauge_flip(int vertex) const {
    CharacterHom h = *this;
    for (int k = 0; k < 6; ++k) {
        bool at = kEdgeVerts[k][0] == vertex || kEdgeVerts[k][1] == vertex;
        if (tag == SubSystem::E7L ? at : !at) h.base[edge_aff(k)] = -h.base[edge_aff(k)];
    }
    return h;
}

CharacterHom CharacterHom::compose(const WeylElem& w) const {
    CharacterHom self = *this;
    return from_function([self, w](const LatticeVec& v) { return self(w.apply(v)); }, tag);
}

CharacterHom length_function_from_lift(const LiftData& lift) {
    CharacterHom h;
    for (int k = 0; k < 6; ++k) h.base[edge_aff(k)] = lift.a[k];
    return h;
}

CharacterHom length_function(const MarkedTetra& T) { return length_function_from_lift(lift_data(T)); }

CharacterHom angle_function(const MarkedTetra& T) {
    CharacterHom ld = length_function(dual_tetra(T));
    CharacterHom a;
    a.tag = SubSystem::E7A;
    for (int s = 0; s < 8; ++s) a.base[s] = ld.base[aff_complement(s)];
    return a;
}

std::array<double, 6> metric_angles_oracle(const MetricSpec& spec) {
    validate_metric(spec);
    Eigen::Matrix4d g = gram_matrix(spec);
    auto cof = [&](int r, int c) {
        Eigen::Matrix3d m;
        int rr = 0;
        for (int a = 0; a < 4; ++a) {
            if (a == r) continue;
            int cc = 0;
            for (int b = 0; b < 4; ++b) {
                if (b == c) continue;
                m(rr, cc++) = g(a, b);
            }
            ++rr;
        }
        return ((r + c) % 2 ? -1.0 : 1.0) * m.determinant();
    };
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        auto [a, b] = complement_pair(i, j);
        double c = -cof(a, b) / std::sqrt(cof(a, a) * cof(b, b));
        out[k] = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return out;
}

bool is_generic(const CharacterHom& L, double tol) {
    for (const auto& r : sub_roots(SubSystem::E7L)) {
        if (r == LatticeVec::unit(kEmpty) || r == LatticeVec::unit(kEmpty, -1)) continue;
        if (std::abs(L(r) - 1.0) < tol) return false;
    }
    return true;
}

cplx det_L(const CharacterHom& L) {
    Mat4 m = Mat4::Identity();
    for (int k = 0; k < 6; ++k) {
        cplx a = L.base[edge_aff(k)];
        cplx c = 0.5 * (a + 1.0 / a);
        m(kEdgeVerts[k][0], kEdgeVerts[k][1]) = c;
        m(kEdgeVerts[k][1], kEdgeVerts[k][0]) = c;
    }
    return m.determinant();
}

cplx det_L_roots(const CharacterHom& L) {
    cplx s = -1.5;
    for (const auto& r : roots()) {
        bool inL = in_sublattice(r, SubSystem::E7L), inA = in_sublattice(r, SubSystem::E7A);
        if (inL && inA) {
            s -= L(r) / 8.0;
        } else if (inL) {
            s += L(r) / 8.0;
        } else if (!inA) {
            // L~(2r) = L(2r - d_I e_I), which lies in Q(E7L)
            LatticeVec v = r * 2 - LatticeVec::unit(kI) * r.d[kI];
            s += L(v) / 64.0;
        }
    }
    return s;
}

Mat4 reconstruction_quadric(const CharacterHom& L, QuadricSign sign) {
    auto e = [](int s) { return LatticeVec::unit(s); };
    Mat4 q = Mat4::Zero();
    q(0, 0) = 1.0;
    q(1, 1) = L(e(k12));
    q(2, 2) = L(e(k13));
    q(3, 3) = L(e(k14));
    double s12 = sign == QuadricSign::Verbatim ? -1.0 : 1.0;
    q(0, 1) = q(1, 0) = s12 * 0.5 * (L(e(k12)) + 1.0);
    q(0, 2) = q(2, 0) = 0.5 * (L(e(k13)) + 1.0);
    q(0, 3) = q(3, 0) = 0.5 * (L(e(k14)) + 1.0);
    auto pairv = [&](int a, int b, int c) {
        return 0.5 * (L(LatticeVec::half({{a, 1}, {b, 1}, {c, 1}, {kEmpty, 1}})) +
                      L(LatticeVec::half({{a, 1}, {b, 1}, {c, -1}, {kEmpty, 1}})));
    };
    q(1, 2) = q(2, 1) = pairv(k12, k13, k23);
    q(1, 3) = q(3, 1) = pairv(k12, k14, k24);
    q(2, 3) = q(3, 2) = pairv(k13, k14, k34);
    return q;
}

MarkedTetra tetra_from_quadric_matrix(const Mat4& q, const CharacterHom& L, int orientation) {
    QuadricP3 Q(q);
    std::array<PlaneP3, 4> H;
    for (int i = 0; i < 4; ++i) H[i] = Vec4::Unit(i);
    std::array<std::array<PointP3, 4>, 4> E;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        auto pts = line_quadric_intersection(LineP3{Vec4::Unit(i), Vec4::Unit(j)}, Q);
        cplx target = L(LatticeVec::unit(edge_aff(k)));
        LineP3 l{Vec4::Unit(i), Vec4::Unit(j)};
        cplx c1 = cross_ratio_on_line(Vec4::Unit(i), pts.first, Vec4::Unit(j), pts.second, l).value();
        bool keep = std::abs(c1 - target) <= std::abs(1.0 / c1 - target);
        E[i][j] = keep ? pts.first : pts.second;
        E[j][i] = keep ? pts.second : pts.first;
    }
    return assemble_with_points(Q, H, orientation, E);
}

double round_trip_residual(const MarkedTetra& T, const CharacterHom& L) {
    CharacterHom lt = length_function(T);
    std::vector<LatticeVec> basis;
    for (int k = 0; k < 6; ++k) basis.push_back(LatticeVec::unit(edge_aff(k)));
    basis.push_back(LatticeVec::unit(kEmpty));
    for (const auto& f : face_vectors_L()) basis.push_back(f);
    for (const auto& c : cycle_vectors()) basis.push_back(c);
    double worst = 0.0;
    for (const auto& v : basis) worst = std::max(worst, rel_err(lt(v), L(v)));
    return worst;
}

Reconstruction reconstruct_from_L(const CharacterHom& L, int orientation, double tol) {
    if (L.tag != SubSystem::E7L) throw Error(ErrorKind::VectorNotInDomain, "length data must live on E7L");
    if (std::abs(det_L(L)) < 1e-12) throw Error(ErrorKind::NotInModuli, "det(L) vanishes");
    if (!is_generic(L)) throw Error(ErrorKind::NotInModuli, "L is not generic");
    Reconstruction out;
    auto attempt = [&](QuadricSign s, MarkedTetra& T) {
        try {
            T = tetra_from_quadric_matrix(reconstruction_quadric(L, s), L, orientation);
            return round_trip_residual(T, L);
        } catch (const Error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    MarkedTetra tv, ts;
    out.verbatim_residual = attempt(QuadricSign::Verbatim, tv);
    out.symmetric_residual = attempt(QuadricSign::Symmetric, ts);
    if (out.verbatim_residual <= tol) {
        out.T = tv;
        out.convention = QuadricSign::Verbatim;
    } else if (out.symmetric_residual <= tol) {
        out.T = ts;
        out.convention = QuadricSign::Symmetric;
    } else {
        throw Error(ErrorKind::RoundTripFailure,
                    "neither sign convention reproduces L (" + std::to_string(out.verbatim_residual) + ", " +
                        std::to_string(out.symmetric_residual) + ")");
    }
    return out;
}

std::array<PointP3, 12> edge_points(const MarkedTetra& T) {
    std::array<PointP3, 12> out;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kEdgeVerts[k];
        out[2 * k] = T.E[i][j];
        out[2 * k + 1] = T.E[j][i];
    }
    return out;
}

}  // namespace tetratrig
