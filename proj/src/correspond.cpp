#include "tetratrig/correspond.hpp"

#include <algorithm>
#include <numbers>

#include "tetratrig/chokim.hpp"

namespace tetratrig {

namespace {

struct Ctx {
    const MarkedTetra& T;
    std::array<std::array<PointP3, 4>, 4> Ep;

    explicit Ctx(const MarkedTetra& t) : T(t), Ep(dual_edge_points(t)) {}

    // 1-based accessors matching the usual labels
    const PointP3& A(int i) const { return T.A[i - 1]; }
    const PlaneP3& H(int i) const { return T.H[i - 1]; }
    const PointP3& E(int i, int j) const { return T.E[i - 1][j - 1]; }
    const PointP3& Et(int i, int j) const { return Ep[i - 1][j - 1]; }
    PointP3 Hv(int i) const { return polar_dual_plane(T.H[i - 1], T.Q); }
    Rulings rul(const PointP3& p) const { return rulings_through(p, T.Q, T.orientation); }
};

cplx on_line(const PointP3& a, const PointP3& b, const PointP3& c, const PointP3& d, const LineP3& l) {
    return cross_ratio_on_line(a, b, c, d, l).value();
}

void add(ChainReport& r, const std::string& name, cplx v) { r.links.push_back({name, v, relative_residual(v, r.rhs)}); }

void finish(ChainReport& r) { r.residual = relative_residual(r.lhs, r.rhs); }

template <typename F>
ChainReport guarded(const char* name, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ConcurrencyFailure) throw;
        throw Error(ErrorKind::AuxiliaryDegenerate, std::string(name) + ": " + e.what());
    }
}

}  // namespace

double ChainReport::worst() const {
    double w = residual;
    for (const auto& l : links) w = std::max(w, l.residual);
    w = std::max(w, concurrency);
    for (const auto& [n, v] : incidences) w = std::max(w, v);
    return w;
}

double relative_residual(cplx a, cplx b) {
    double m = std::max(std::abs(a), std::abs(b));
    return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

ChainReport res_F1_face_recipe(const MarkedTetra& T) {
    return guarded("face recipe", [&] {
        Ctx c(T);
        ChainReport r;
        r.recipe = "res_F1_face";
        r.root = LatticeVec::half({{k23, 1}, {k24, 1}, {k34, 1}, {kEmpty, 1}});
        r.rhs = length_function(T)(r.root);

        PointP3 U = conic_second_point(plane_through(c.A(3), c.A(4), c.E(1, 2)), c.H(3), T.Q, c.E(1, 2));
        PointP3 V = conic_second_point(plane_through(c.E(1, 2), c.E(3, 4), c.E(2, 3)), c.H(3), T.Q, c.E(1, 2));
        add(r, "conic H3 [E21,V,U,E42] from E12",
            cross_ratio_on_conic({c.E(2, 1), V, U, c.E(4, 2)}, T.Q, c.H(3), c.E(1, 2)).value());

        LineP3 a24{c.A(2), c.A(4)};
        PointP3 X = meet(a24, LineP3{c.E(2, 3), c.E(3, 4)});
        r.lhs = on_line(c.A(2), X, c.A(4), c.E(4, 2), a24);
        add(r, "line A2A4 [A2,X,A4,E42]", r.lhs);
        finish(r);
        return r;
    });
}

ChainReport res_F1_edge_recipe(const MarkedTetra& T) {
    return guarded("edge recipe", [&] {
        Ctx c(T);
        ChainReport r;
        r.recipe = "res_F1_edge";
        r.root = LatticeVec::half({{k12, 1}, {k13, 1}, {k23, 1}, {kEmpty, 1}});
        r.rhs = length_function(T)(r.root);

        PointP3 W = conic_second_point(plane_through(c.A(3), c.A(4), c.E(1, 2)), c.H(4), T.Q, c.E(1, 2));
        add(r, "conic H4 [W,E31,E21,E23] from E12",
            cross_ratio_on_conic({W, c.E(3, 1), c.E(2, 1), c.E(2, 3)}, T.Q, c.H(4), c.E(1, 2)).value());

        LineP3 a23{c.A(2), c.A(3)};
        PointP3 X = meet(LineP3{c.E(1, 2), c.E(3, 1)}, a23);
        r.lhs = on_line(c.A(3), X, c.A(2), c.E(2, 3), a23);
        add(r, "line A2A3 [A3,X,A2,E23]", r.lhs);
        finish(r);
        return r;
    });
}

ChainReport res_F2_vertex_recipe(const MarkedTetra& T) {
    return guarded("vertex recipe", [&] {
        Ctx c(T);
        ChainReport r;
        r.recipe = "res_F2_vertex";
        r.root = LatticeVec::half({{k12, 1}, {k13, 1}, {k14, 1}, {kI, 1}});
        r.rhs = angle_function(T)(r.root);

        Rulings g12 = c.rul(c.E(1, 2));
        const LineP3 &L12 = g12.left, &R12 = g12.right;
        PointP3 P1 = meet(c.H(2), R12), P3 = meet(c.H(2), L12);
        add(r, "conic H2 [R12,E31,L12,E41] from E34",
            cross_ratio_on_conic({P1, c.E(3, 1), P3, c.E(4, 1)}, T.Q, c.H(2), c.E(3, 4)).value());

        LineP3 L31 = c.rul(c.E(3, 1)).left, L41 = c.rul(c.E(4, 1)).left;
        add(r, "ruling R12 [H2,L31,E12,L41]", on_line(P1, meet(L31, R12), c.E(1, 2), meet(L41, R12), R12));

        add(r, "pencil about R12 [H2v,L31,L12,L41]",
            cross_ratio_of_planes({plane_of(c.Hv(2), R12), plane_of(L31, R12), plane_of(L12, R12), plane_of(L41, R12)},
                                  R12)
                .value());

        LineP3 h24{c.Hv(2), c.Hv(4)};
        PointP3 X = meet(LineP3{c.Et(4, 1), c.Et(2, 1)}, h24);
        r.lhs = on_line(c.Hv(2), c.Et(3, 1), c.Hv(4), X, h24);
        add(r, "line H2vH4v [H2v,E31',H4v,X]", r.lhs);
        finish(r);
        return r;
    });
}

ChainReport res_F2_face_recipe(const MarkedTetra& T) {
    return guarded("dual face recipe", [&] {
        Ctx c(T);
        ChainReport r;
        r.recipe = "res_F2_face";
        r.root = LatticeVec::half({{k14, 1}, {k24, 1}, {k34, 1}, {kI, 1}});
        r.rhs = angle_function(T)(r.root);

        Rulings g12 = c.rul(c.E(1, 2));
        const LineP3 &L12 = g12.left, &R12 = g12.right;
        PointP3 U = conic_second_point(plane_through(c.E(1, 2), c.E(3, 4), c.E(4, 1)), c.H(1), T.Q, c.E(3, 4));
        PointP3 P1 = meet(c.H(1), L12), P3 = meet(c.H(1), R12);
        add(r, "conic H1 [L12,U,R12,E42] from E23",
            cross_ratio_on_conic({P1, U, P3, c.E(4, 2)}, T.Q, c.H(1), c.E(2, 3)).value());

        LineP3 LU = c.rul(U).left, L42 = c.rul(c.E(4, 2)).left;
        add(r, "ruling R12 [E12,LU,H1,L42]", on_line(c.E(1, 2), meet(LU, R12), P3, meet(L42, R12), R12));

        add(r, "pencil about R12 [L12,LU,H1v,L42]",
            cross_ratio_of_planes({plane_of(L12, R12), plane_of(LU, R12), plane_of(c.Hv(1), R12), plane_of(L42, R12)},
                                  R12)
                .value());

        PlaneP3 PU = plane_of(U, R12);
        LineP3 h13{c.Hv(3), c.Hv(1)};
        LineP3 e4143{c.Et(4, 1), c.Et(4, 3)};
        PointP3 X = meet(PU, h13);
        add(r, "line H1vH3v [H3v,<U,R12>,H1v,E42']", on_line(c.Hv(3), X, c.Hv(1), c.Et(4, 2), h13));

        PointP3 Y = meet(e4143, h13);
        r.lhs = on_line(c.Hv(3), Y, c.Hv(1), c.Et(4, 2), h13);
        add(r, "line H1vH3v [H3v,E41'E43',H1v,E42']", r.lhs);

        // The three loci meet in one point: compare the three pairwise intersections.
        PointP3 Z = meet(PU, e4143);
        r.concurrency = std::max({wedge_distance(X, Y), wedge_distance(Y, Z), wedge_distance(X, Z)});
        if (r.concurrency > 1e-5)
            throw Error(ErrorKind::ConcurrencyFailure, "scatter " + std::to_string(r.concurrency));

        // Auxiliary points of the argument and their incidences.
        PointP3 V = meet(LineP3{c.E(1, 2), c.E(4, 1)}, LineP3{U, c.E(3, 4)});
        PointP3 W1 = meet(c.rul(c.Et(2, 1)).right, c.rul(c.Et(4, 1)).left);
        PointP3 W2 = meet(LU, c.rul(c.Et(4, 3)).right);
        PointP3 W = meet(LineP3{W1, W2}, h13);
        PlaneP3 Vd = polar_dual_point(V, T.Q);
        for (auto [name, p] : {std::pair<const char*, PointP3>{"V dual through H1v", c.Hv(1)},
                               {"V dual through H3v", c.Hv(3)},
                               {"V dual through W1", W1},
                               {"V dual through W2", W2}})
            r.incidences.push_back({name, incidence(Vd, p)});
        r.incidences.push_back({"W on <U,R12>", incidence(PU, W)});
        r.incidences.push_back({"W on E41'E43'", line_distance(e4143, W)});
        finish(r);
        return r;
    });
}

std::vector<ChainReport> all_chains(const MarkedTetra& T) {
    return {res_F1_face_recipe(T), res_F1_edge_recipe(T), res_F2_vertex_recipe(T), res_F2_face_recipe(T)};
}

double duality_residual(const MarkedTetra& T) {
    MarkedTetra D = dual_tetra(T);
    double a = relative_residual(res_F2_vertex_recipe(T).lhs, res_F1_face_recipe(D).lhs);
    double b = relative_residual(res_F2_face_recipe(T).lhs, res_F1_edge_recipe(D).lhs);
    return std::max(a, b);
}

Thm14Report verify_thm14(const MetricSpec& spec) {
    MarkedTetra T = from_metric(spec);
    Thm14Report rep;
    rep.chains = all_chains(T);
    for (const auto& c : rep.chains) rep.chain_residual = std::max(rep.chain_residual, c.worst());

    auto pi = config_metric(spec, ConfigKind::Pi).values();
    auto om = config_metric(spec, ConfigKind::Omega).values();
    // faces 234 and 123 on the length side; the A-side values are conjugate face angle exponentials
    std::array<cplx, 4> expect{pi[4], pi[1], std::conj(om[4]), std::conj(om[1])};
    for (int k = 0; k < 4; ++k)
        rep.pattern_residual = std::max(rep.pattern_residual, relative_residual(rep.chains[k].lhs, expect[k]));

    CharacterHom L = length_function(T), A = angle_function(T);
    auto alpha = metric_angles_oracle(spec);
    bool sph = spec.geometry == Geometry::Spherical;
    for (int k = 0; k < 6; ++k) {
        double l = spec.lengths[k];
        cplx le = sph ? std::polar(1.0, 2 * l) : cplx(std::exp(2 * l));
        cplx ae = std::polar(1.0, 2 * (std::numbers::pi - alpha[k]));
        LatticeVec e = LatticeVec::unit(edge_aff(k));
        rep.pattern_residual = std::max({rep.pattern_residual, relative_residual(L(e), le), relative_residual(A(e), ae)});
    }
    return rep;
}

}  // namespace tetratrig
