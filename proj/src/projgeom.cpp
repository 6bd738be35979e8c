#include "tetratrig/projgeom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace tetratrig {

namespace {

std::atomic<double> g_tol{1e-9};

cplx det2(const P1& a, const P1& b) { return a.z0 * b.z1 - a.z1 * b.z0; }

double norm2(const P1& a) { return std::sqrt(std::norm(a.z0) + std::norm(a.z1)); }

P1 unit(const P1& a) {
    double n = norm2(a);
    if (n == 0.0) throw Error(ErrorKind::DegenerateConfiguration, "zero homogeneous pair");
    return {a.z0 / n, a.z1 / n};
}

}  // namespace

double wedge_distance(const Vec4& a, const Vec4& b) {
    double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 1.0;
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            m = std::max(m, std::abs(a(i) * b(j) - a(j) * b(i)));
    return m / (na * nb);
}

namespace {

double wedge(const Vec4& a, const Vec4& b) { return wedge_distance(a, b); }

Eigen::Matrix<cplx, 4, 2> null_space_2(const Eigen::Matrix<cplx, 2, 4>& m) {
    Eigen::JacobiSVD<Eigen::Matrix<cplx, 2, 4>> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().rightCols<2>();
}

Vec4 null_vector(const Eigen::Matrix<cplx, Eigen::Dynamic, 4>& m) {
    Eigen::JacobiSVD<Eigen::Matrix<cplx, Eigen::Dynamic, 4>> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(3);
}

// T with T^T Q T = I by symmetric elimination with diagonal pivoting; returns T^{-1}.
Mat4 symmetric_factor(const Mat4& q) {
    Mat4 a = q, t = Mat4::Identity();
    const double scale = q.cwiseAbs().maxCoeff();
    for (int k = 0; k < 4; ++k) {
        int idx = k;
        for (int i = k + 1; i < 4; ++i)
            if (std::abs(a(i, i)) > std::abs(a(idx, idx))) idx = i;
        if (std::abs(a(idx, idx)) < 1e-8 * scale) {
            int bi = k, bj = k + 1;
            double best = -1;
            for (int i = k; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (std::abs(a(i, j)) > best) { best = std::abs(a(i, j)); bi = i; bj = j; }
            Mat4 e = Mat4::Identity();
            e(bj, bi) = 1.0;
            a = e.transpose() * a * e;
            t = t * e;
            idx = bi;
        }
        if (std::abs(a(idx, idx)) == 0.0)
            throw Error(ErrorKind::DegenerateConfiguration, "singular quadric");
        Mat4 p = Mat4::Identity();
        p.row(k).swap(p.row(idx));
        a = p.transpose() * a * p;
        t = t * p;
        Mat4 e = Mat4::Identity();
        for (int j = k + 1; j < 4; ++j) e(k, j) = -a(k, j) / a(k, k);
        a = e.transpose() * a * e;
        t = t * e;
        Mat4 s = Mat4::Identity();
        s(k, k) = 1.0 / std::sqrt(a(k, k));
        a = s.transpose() * a * s;
        t = t * s;
    }
    return t.inverse();
}

Mat4 normal_change() {
    const cplx i(0, 1);
    Mat4 c;
    c << 1, i, 0, 0,
         0, 0, 1, i,
         0, 0, -1, i,
         1, -i, 0, 0;
    return c;
}

}  // namespace

double default_tol() { return g_tol.load(); }
void set_default_tol(double tol) { g_tol.store(tol); }

bool P1::is_infinite(double tol) const { return std::abs(z1) <= tol * norm2(*this); }

cplx P1::value() const {
    if (z1 == cplx(0.0)) throw Error(ErrorKind::DegenerateConfiguration, "value at infinity");
    return z0 / z1;
}

bool P1::equals(const P1& o, double tol) const { return chordal(*this, o) <= tol; }

double chordal(const P1& a, const P1& b) {
    return std::abs(det2(a, b)) / (norm2(a) * norm2(b));
}

P1 cross_ratio(const P1& z1, const P1& z2, const P1& z3, const P1& z4, double tol) {
    P1 a = unit(z1), b = unit(z2), c = unit(z3), d = unit(z4);
    cplx num = det2(a, b) * det2(c, d);
    cplx den = det2(a, d) * det2(c, b);
    if (std::abs(num) <= tol && std::abs(den) <= tol)
        throw Error(ErrorKind::DegenerateConfiguration, "cross-ratio is 0/0");
    return {num, den};
}

cplx cross_ratio(cplx z1, cplx z2, cplx z3, cplx z4) {
    return (z1 - z2) * (z3 - z4) / ((z1 - z4) * (z3 - z2));
}

P1 MobiusMap::operator()(const P1& z) const {
    return {m(0, 0) * z.z0 + m(0, 1) * z.z1, m(1, 0) * z.z0 + m(1, 1) * z.z1};
}

cplx MobiusMap::operator()(cplx z) const { return (*this)(P1::finite(z)).value(); }

MobiusMap MobiusMap::inverse() const { return {m.inverse()}; }

MobiusMap MobiusMap::compose(const MobiusMap& inner) const { return {m * inner.m}; }

bool MobiusMap::equals(const MobiusMap& o, double tol) const {
    Vec4 a, b;
    a << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    b << o.m(0, 0), o.m(0, 1), o.m(1, 0), o.m(1, 1);
    return wedge(a, b) <= tol;
}

namespace {

// Matrix of z -> [z,z1][z2,z3] / ([z,z3][z2,z1]), sending the triple to 0, 1, inf.
Mat2 to_standard(const std::array<P1, 3>& t, double tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (chordal(t[i], t[j]) <= tol)
                throw Error(ErrorKind::DegenerateTriple, "triple has coincident points");
    P1 a = unit(t[0]), b = unit(t[1]), c = unit(t[2]);
    Mat2 k;
    cplx s = det2(b, c), u = det2(b, a);
    k << s * a.z1, -s * a.z0, u * c.z1, -u * c.z0;
    return k;
}

}  // namespace

MobiusMap mobius_through(const std::array<P1, 3>& src, const std::array<P1, 3>& dst, double tol) {
    Mat2 ks = to_standard(src, tol), kd = to_standard(dst, tol);
    Mat2 m = kd.inverse() * ks;
    return {m / m.norm()};
}

Vec4 normalized(const Vec4& v) {
    double n = v.norm();
    if (n == 0.0) throw Error(ErrorKind::DegenerateConfiguration, "zero vector");
    return v / n;
}

bool proportional(const Vec4& a, const Vec4& b, double tol) { return wedge(a, b) <= tol; }

double incidence(const PlaneP3& h, const PointP3& x) {
    return std::abs(pair(h, x)) / (h.norm() * x.norm());
}

LineP3 line_through(const PointP3& a, const PointP3& b, double tol) {
    if (proportional(a, b, tol))
        throw Error(ErrorKind::DegenerateConfiguration, "line through coincident points");
    return {normalized(a), normalized(b)};
}

LineP3 line_of_planes(const PlaneP3& a, const PlaneP3& b) {
    Eigen::Matrix<cplx, 2, 4> m;
    m.row(0) = normalized(a).transpose();
    m.row(1) = normalized(b).transpose();
    auto n = null_space_2(m);
    return {n.col(0), n.col(1)};
}

PlaneP3 plane_through(const PointP3& a, const PointP3& b, const PointP3& c) {
    Eigen::Matrix<cplx, Eigen::Dynamic, 4> m(3, 4);
    m.row(0) = normalized(a).transpose();
    m.row(1) = normalized(b).transpose();
    m.row(2) = normalized(c).transpose();
    return null_vector(m);
}

PlaneP3 plane_of(const PointP3& p, const LineP3& l) { return plane_through(p, l.p, l.q); }

PlaneP3 plane_of(const LineP3& l1, const LineP3& l2) {
    const PointP3& x = line_distance(l1, l2.p) >= line_distance(l1, l2.q) ? l2.p : l2.q;
    return plane_through(l1.p, l1.q, x);
}

PointP3 meet(const LineP3& l1, const LineP3& l2) {
    Eigen::Matrix<cplx, Eigen::Dynamic, 4> m(4, 4);
    m.col(0) = normalized(l1.p);
    m.col(1) = normalized(l1.q);
    m.col(2) = -normalized(l2.p);
    m.col(3) = -normalized(l2.q);
    Eigen::JacobiSVD<Eigen::Matrix<cplx, Eigen::Dynamic, 4>> svd(m, Eigen::ComputeFullV);
    Vec4 v = svd.matrixV().col(3);
    return normalized(v(0) * m.col(0) + v(1) * m.col(1));
}

PointP3 meet(const PlaneP3& h, const LineP3& l) {
    return normalized(pair(h, l.q) * l.p - pair(h, l.p) * l.q);
}

double line_distance(const LineP3& l, const PointP3& x) {
    Vec4 e1 = normalized(l.p);
    Vec4 e2 = l.q - e1 * e1.dot(l.q);
    e2 = normalized(e2);
    Vec4 r = x - e1 * e1.dot(x) - e2 * e2.dot(x);
    return r.norm() / x.norm();
}

bool same_line(const LineP3& a, const LineP3& b, double tol) {
    return line_distance(a, b.p) <= tol && line_distance(a, b.q) <= tol;
}

P1 line_coordinate(const LineP3& l, const PointP3& x, double tol) {
    Eigen::Matrix<cplx, 4, 2> m;
    m.col(0) = normalized(l.p);
    m.col(1) = normalized(l.q);
    Vec4 xn = normalized(x);
    Eigen::Matrix<cplx, 2, 1> c = m.colPivHouseholderQr().solve(xn);
    double res = (m * c - xn).norm();
    if (res > tol) throw Error(ErrorKind::PointOffCarrier, "point not on carrier line");
    return {c(0), c(1)};
}

P1 cross_ratio_on_line(const PointP3& p1, const PointP3& p2, const PointP3& p3,
                       const PointP3& p4, const LineP3& carrier, double tol) {
    return cross_ratio(line_coordinate(carrier, p1, tol), line_coordinate(carrier, p2, tol),
                       line_coordinate(carrier, p3, tol), line_coordinate(carrier, p4, tol));
}

P1 cross_ratio_collinear(const PointP3& p1, const PointP3& p2, const PointP3& p3,
                         const PointP3& p4, double tol) {
    const std::array<const PointP3*, 4> pts{&p1, &p2, &p3, &p4};
    int bi = 0, bj = 1;
    double best = -1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double w = wedge(*pts[i], *pts[j]);
            if (w > best) { best = w; bi = i; bj = j; }
        }
    if (best <= tol) throw Error(ErrorKind::DegenerateConfiguration, "all four points coincide");
    LineP3 carrier{normalized(*pts[bi]), normalized(*pts[bj])};
    return cross_ratio_on_line(p1, p2, p3, p4, carrier, tol);
}

QuadricP3::QuadricP3(const Mat4& m) : m_(0.5 * (m + m.transpose())) {
    double s = m_.cwiseAbs().maxCoeff();
    if (s == 0.0 || std::abs(m_.determinant()) < 1e-12 * s * s * s * s)
        throw Error(ErrorKind::DegenerateConfiguration, "quadric is singular");
    to_normal_ = normal_change() * symmetric_factor(m_);
    from_normal_ = to_normal_.inverse();
}

double QuadricP3::residual(const PointP3& x) const {
    return std::abs(eval(x)) / (m_.norm() * x.squaredNorm());
}

std::pair<PointP3, PointP3> line_quadric_intersection(const LineP3& l, const QuadricP3& Q,
                                                      double tol) {
    Vec4 a = normalized(l.p), b = normalized(l.q);
    const Mat4& q = Q.matrix();
    cplx A = (a.transpose() * q * a)(0, 0);
    cplx B = 2.0 * (a.transpose() * q * b)(0, 0);
    cplx C = (b.transpose() * q * b)(0, 0);
    double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (scale <= tol * q.norm()) throw Error(ErrorKind::LineInQuadric, "line lies in the quadric");
    cplx disc = B * B - 4.0 * A * C;
    if (std::abs(disc) <= tol * scale * scale)
        throw Error(ErrorKind::TangentLine, "line is tangent to the quadric");
    cplx sq = std::sqrt(disc);
    if ((std::conj(B) * sq).real() < 0) sq = -sq;
    cplx qq = -0.5 * (B + sq);
    // roots (s:t) of A s^2 + B s t + C t^2 are (qq : A) and (C : qq)
    return {normalized(qq * a + A * b), normalized(C * a + qq * b)};
}

PlaneP3 polar_dual_point(const PointP3& x, const QuadricP3& Q) { return Q.matrix() * x; }

PointP3 polar_dual_plane(const PlaneP3& h, const QuadricP3& Q) {
    return Q.matrix().partialPivLu().solve(h);
}

LineP3 polar_dual_line(const LineP3& l, const QuadricP3& Q) {
    return line_of_planes(polar_dual_point(l.p, Q), polar_dual_point(l.q, Q));
}

Rulings rulings_through(const PointP3& p, const QuadricP3& Q, int orientation, double tol) {
    if (Q.residual(p) > tol) throw Error(ErrorKind::PointOffQuadric, "point not on quadric");
    Vec4 u = Q.to_normal() * normalized(p);
    // u = [[x, y], [z, w]] has rank one: column a and row b
    cplx x = u(0), y = u(1), z = u(2), w = u(3);
    cplx a0, a1, b0, b1;
    if (std::norm(x) + std::norm(z) >= std::norm(y) + std::norm(w)) { a0 = x; a1 = z; }
    else { a0 = y; a1 = w; }
    if (std::norm(x) + std::norm(y) >= std::norm(z) + std::norm(w)) { b0 = x; b1 = y; }
    else { b0 = z; b1 = w; }
    const Mat4& mi = Q.from_normal();
    Vec4 v1, v2, v3, v4;
    v1 << a0, 0, a1, 0;
    v2 << 0, a0, 0, a1;
    v3 << b0, b1, 0, 0;
    v4 << 0, 0, b0, b1;
    LineP3 first{normalized(mi * v1), normalized(mi * v2)};
    LineP3 second{normalized(mi * v3), normalized(mi * v4)};
    if (orientation & 1) return {second, first};
    return {first, second};
}

LineP3 dual_line_via_rulings(const LineP3& l, const QuadricP3& Q, int orientation, double tol) {
    auto [x, y] = line_quadric_intersection(l, Q, tol);
    Rulings rx = rulings_through(x, Q, orientation, 1e-7);
    Rulings ry = rulings_through(y, Q, orientation, 1e-7);
    return line_through(meet(rx.left, ry.right), meet(rx.right, ry.left), tol);
}

namespace {

Eigen::Matrix<cplx, 4, 3> plane_basis(const PlaneP3& h) {
    Eigen::Matrix<cplx, 1, 4> m = normalized(h).transpose();
    Eigen::JacobiSVD<Eigen::Matrix<cplx, 1, 4>> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().rightCols<3>();
}

void check_conic(const QuadricP3& Q, const Eigen::Matrix<cplx, 4, 3>& basis) {
    Eigen::Matrix<cplx, 3, 3> r = basis.transpose() * Q.matrix() * basis;
    double s = r.cwiseAbs().maxCoeff();
    if (s == 0.0 || std::abs(r.determinant()) < 1e-10 * s * s * s)
        throw Error(ErrorKind::DegenerateConic, "plane section is singular");
}

}  // namespace

P1 cross_ratio_on_conic(const std::array<PointP3, 4>& pts, const QuadricP3& Q,
                        const PlaneP3& plane, const PointP3& center, double tol) {
    auto basis = plane_basis(plane);
    check_conic(Q, basis);
    for (const auto& p : pts)
        if (Q.residual(p) > tol || incidence(plane, p) > tol)
            throw Error(ErrorKind::PointOffCarrier, "point not on the conic");
    // target line: the pair of basis vectors farthest from the center
    LineP3 target{basis.col(0), basis.col(1)};
    double best = -1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            LineP3 cand{basis.col(i), basis.col(j)};
            double d = line_distance(cand, center);
            if (d > best) { best = d; target = cand; }
        }
    std::array<PointP3, 4> img;
    for (int k = 0; k < 4; ++k) {
        if (proportional(pts[k], center, std::sqrt(tol))) {
            LineP3 tangent = line_of_planes(Q.matrix() * center, plane);
            img[k] = meet(tangent, target);
        } else {
            img[k] = meet(LineP3{normalized(center), normalized(pts[k])}, target);
        }
    }
    return cross_ratio_on_line(img[0], img[1], img[2], img[3], target, 1e-6);
}

P1 cross_ratio_on_conic(const std::array<PointP3, 4>& pts, const QuadricP3& Q,
                        const PlaneP3& plane, double tol) {
    auto basis = plane_basis(plane);
    PointP3 center = pts[0];
    double best = -1;
    const double mix[4][3] = {{1, 0.37, -0.61}, {0.29, 1, 0.83}, {-0.71, 0.47, 1}, {1, -0.9, 0.4}};
    for (const auto& mm : mix) {
        LineP3 l{basis.col(0) + mm[1] * basis.col(1), basis.col(2) + mm[2] * basis.col(0) + mm[0] * basis.col(1)};
        std::pair<PointP3, PointP3> cands;
        try {
            cands = line_quadric_intersection(l, Q);
        } catch (const Error&) {
            continue;
        }
        for (const auto& c : {cands.first, cands.second}) {
            double d = 2.0;
            for (const auto& p : pts) d = std::min(d, wedge(c, p));
            if (d > best) { best = d; center = c; }
        }
    }
    if (best <= 0) throw Error(ErrorKind::DegenerateConic, "no usable projection center");
    return cross_ratio_on_conic(pts, Q, plane, center, tol);
}

PointP3 conic_second_point(const PlaneP3& cutting, const PlaneP3& conic_plane,
                           const QuadricP3& Q, const PointP3& known) {
    LineP3 l = line_of_planes(cutting, conic_plane);
    Vec4 a = normalized(known);
    if (line_distance(l, a) > 1e-7) throw Error(ErrorKind::PointOffCarrier, "known point is off the cut line");
    if (Q.residual(a) > 1e-7) throw Error(ErrorKind::PointOffQuadric, "known point is off the quadric");
    Vec4 b = normalized(wedge(l.p, a) > wedge(l.q, a) ? l.p : l.q);
    // With a on Q the roots of B s t + C t^2 are t = 0 and (s:t) = (-C:B); a tangent line gives a back.
    cplx B = 2.0 * (a.transpose() * Q.matrix() * b)(0, 0);
    cplx C = (b.transpose() * Q.matrix() * b)(0, 0);
    if (std::abs(B) + std::abs(C) <= 1e-12 * Q.matrix().norm())
        throw Error(ErrorKind::LineInQuadric, "cut line lies in the quadric");
    return normalized(-C * a + B * b);
}

P1 cross_ratio_of_planes(const std::array<PlaneP3, 4>& planes, const LineP3& axis) {
    for (const auto& h : planes)
        if (incidence(h, axis.p) > 1e-7 || incidence(h, axis.q) > 1e-7)
            throw Error(ErrorKind::PointOffCarrier, "plane does not contain the axis");
    static const double cand[4][4] = {{0.3, 1.1, -0.7, 0.2}, {1.3, -0.4, 0.5, 0.9},
                                      {-0.6, 0.8, 1.2, -1.0}, {0.9, 0.1, -0.3, 1.4}};
    Vec4 a, b;
    double best = -1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vec4 x, y;
            x << cand[i][0], cand[i][1], cand[i][2], cand[i][3];
            y << cand[j][0], cand[j][1], cand[j][2], cand[j][3];
            Mat4 m;
            m << normalized(x), normalized(y), normalized(axis.p), normalized(axis.q);
            double d = std::abs(m.determinant());
            if (d > best) { best = d; a = x; b = y; }
        }
    std::array<P1, 4> c;
    for (int k = 0; k < 4; ++k) {
        Vec4 h = normalized(planes[k]);
        c[k] = {pair(h, b), -pair(h, a)};
    }
    return cross_ratio(c[0], c[1], c[2], c[3]);
}

}  // namespace tetratrig
