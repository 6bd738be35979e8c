#pragma once

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "tetratrig/errors.hpp"

namespace tetratrig {

using cplx = std::complex<double>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Mat2 = Eigen::Matrix<cplx, 2, 2>;

// Process-wide default for projective comparisons; every op also takes an override.
double default_tol();
void set_default_tol(double tol);

// Point of P^1 in homogeneous coordinates; the value is z0/z1, infinity is (1,0).
struct P1 {
    cplx z0{0.0}, z1{1.0};

    static P1 finite(cplx z) { return {z, 1.0}; }
    static P1 infinity() { return {1.0, 0.0}; }

    bool is_infinite(double tol = default_tol()) const;
    cplx value() const;  // throws DegenerateConfiguration at infinity
    bool equals(const P1& o, double tol = default_tol()) const;
};

// Chordal distance on the Riemann sphere, in [0, 1].
double chordal(const P1& a, const P1& b);

P1 cross_ratio(const P1& z1, const P1& z2, const P1& z3, const P1& z4,
               double tol = default_tol());
cplx cross_ratio(cplx z1, cplx z2, cplx z3, cplx z4);

struct MobiusMap {
    Mat2 m = Mat2::Identity();

    P1 operator()(const P1& z) const;
    cplx operator()(cplx z) const;
    MobiusMap inverse() const;
    MobiusMap compose(const MobiusMap& inner) const;  // this ∘ inner
    bool equals(const MobiusMap& o, double tol = default_tol()) const;
};

MobiusMap mobius_through(const std::array<P1, 3>& src, const std::array<P1, 3>& dst,
                         double tol = default_tol());

// Homogeneous vectors. Planes are covectors stored in the same type.
using PointP3 = Vec4;
using PlaneP3 = Vec4;

struct LineP3 {
    PointP3 p, q;
};

// Bilinear pairing h.x (no conjugation).
inline cplx pair(const Vec4& h, const Vec4& x) { return h.cwiseProduct(x).sum(); }

Vec4 normalized(const Vec4& v);
// Max-abs 2x2 minor of the normalized pair: a sine-type distance in [0, 1].
double wedge_distance(const Vec4& a, const Vec4& b);
bool proportional(const Vec4& a, const Vec4& b, double tol = default_tol());
double incidence(const PlaneP3& h, const PointP3& x);  // |h.x| / (|h||x|)

LineP3 line_through(const PointP3& a, const PointP3& b, double tol = default_tol());
LineP3 line_of_planes(const PlaneP3& a, const PlaneP3& b);
PlaneP3 plane_through(const PointP3& a, const PointP3& b, const PointP3& c);
PlaneP3 plane_of(const PointP3& p, const LineP3& l);
PlaneP3 plane_of(const LineP3& l1, const LineP3& l2);
PointP3 meet(const LineP3& l1, const LineP3& l2);
PointP3 meet(const PlaneP3& h, const LineP3& l);
double line_distance(const LineP3& l, const PointP3& x);  // sine-type residual
bool same_line(const LineP3& a, const LineP3& b, double tol = default_tol());

// Coordinates (a, b) of x = a*l.p + b*l.q; throws PointOffCarrier.
P1 line_coordinate(const LineP3& l, const PointP3& x, double tol = 1e-7);
P1 cross_ratio_on_line(const PointP3& p1, const PointP3& p2, const PointP3& p3,
                       const PointP3& p4, const LineP3& carrier, double tol = 1e-7);
// Uses the span of the first two distinct points as carrier.
P1 cross_ratio_collinear(const PointP3& p1, const PointP3& p2, const PointP3& p3,
                         const PointP3& p4, double tol = 1e-7);

class QuadricP3 {
public:
    QuadricP3() = default;
    explicit QuadricP3(const Mat4& m);

    const Mat4& matrix() const { return m_; }
    cplx eval(const PointP3& x) const { return (x.transpose() * m_ * x)(0, 0); }
    double residual(const PointP3& x) const;  // |x^T Q x| / (|Q| |x|^2)
    // u = to_normal() * x gives coordinates in which Q is xw - yz.
    const Mat4& to_normal() const { return to_normal_; }
    const Mat4& from_normal() const { return from_normal_; }

private:
    Mat4 m_ = Mat4::Identity();
    Mat4 to_normal_ = Mat4::Identity();
    Mat4 from_normal_ = Mat4::Identity();
};

std::pair<PointP3, PointP3> line_quadric_intersection(const LineP3& l, const QuadricP3& Q,
                                                      double tol = default_tol());

PlaneP3 polar_dual_point(const PointP3& x, const QuadricP3& Q);
PointP3 polar_dual_plane(const PlaneP3& h, const QuadricP3& Q);
LineP3 polar_dual_line(const LineP3& l, const QuadricP3& Q);

struct Rulings {
    LineP3 left, right;
};
Rulings rulings_through(const PointP3& p, const QuadricP3& Q, int orientation,
                        double tol = 1e-7);
LineP3 dual_line_via_rulings(const LineP3& l, const QuadricP3& Q, int orientation,
                             double tol = default_tol());

// Conic cut from Q by `plane`; points are projected from `center` (a point of the
// conic) onto a line of the plane. A point equal to the center goes to the tangent.
P1 cross_ratio_on_conic(const std::array<PointP3, 4>& pts, const QuadricP3& Q,
                        const PlaneP3& plane, const PointP3& center, double tol = 1e-7);
// Picks a center on the conic away from the four points.
P1 cross_ratio_on_conic(const std::array<PointP3, 4>& pts, const QuadricP3& Q,
                        const PlaneP3& plane, double tol = 1e-7);
// The conic point of plane ∩ (Q ∩ conic_plane) other than `known`; `known` itself on a tangent cut.
PointP3 conic_second_point(const PlaneP3& cutting, const PlaneP3& conic_plane,
                           const QuadricP3& Q, const PointP3& known);

// Cross-ratio of four planes of a pencil with common axis.
P1 cross_ratio_of_planes(const std::array<PlaneP3, 4>& planes, const LineP3& axis);

}  // namespace tetratrig
