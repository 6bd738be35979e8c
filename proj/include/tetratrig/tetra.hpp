#pragma once

#include <array>
#include <functional>
#include <string>

#include "tetratrig/e8lattice.hpp"
#include "tetratrig/projgeom.hpp"

namespace tetratrig {

enum class Geometry { Spherical, Hyperbolic };

const char* geometry_name(Geometry g);

// Edge k of the fixed order 12,13,14,23,24,34 joins vertices kEdgeVerts[k] (0-based).
constexpr std::array<std::array<int, 2>, 6> kEdgeVerts{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int edge_slot(int i, int j);  // 0-based vertices -> 0..5
// Aff index of edge slot k.
int edge_aff(int k);
// Complementary pair of (i, j), in increasing order.
std::array<int, 2> complement_pair(int i, int j);

struct MetricSpec {
    Geometry geometry = Geometry::Hyperbolic;
    std::array<double, 6> lengths{};  // 12,13,14,23,24,34
};

Eigen::Matrix4d gram_matrix(const MetricSpec& spec);
// Throws NotRealizable or NearDegenerate.
void validate_metric(const MetricSpec& spec);
bool is_realizable(const MetricSpec& spec);

struct MarkedTetra {
    QuadricP3 Q;
    std::array<PlaneP3, 4> H;
    std::array<PointP3, 4> A;  // A_i = ∩_{j≠i} H_j
    int orientation = 0;
    std::array<std::array<PointP3, 4>, 4> E;  // E[i][j], i ≠ j

    const PointP3& edge_point(int i, int j) const { return E[i][j]; }
    LineP3 edge_line(int i, int j) const { return {A[i], A[j]}; }
};

// Bit k set when E_ij (edge slot k) is the second root of line_quadric_intersection.
unsigned edge_order_bits(const MarkedTetra& T);
// Builds and validates a marked tetrahedron from quadric, planes and marking data.
MarkedTetra assemble_tetra(const QuadricP3& Q, const std::array<PlaneP3, 4>& H, int orientation,
                           unsigned order_bits);

enum class OrientationChoice { Canonical, Zero, One };

MarkedTetra from_metric(const MetricSpec& spec, OrientationChoice choice = OrientationChoice::Canonical);
int canonical_orientation(const MetricSpec& spec);

// Ep[i][j] = L(E_ij) ∩ R(E_ji), Ep[j][i] = R(E_ij) ∩ L(E_ji), before relabeling.
std::array<std::array<PointP3, 4>, 4> dual_edge_points(const MarkedTetra& T);
MarkedTetra dual_tetra(const MarkedTetra& T);

// Right-hand side of the Menelaus face identity for the face (i, j, k), i<j<k:
// [A_k, E_ki, A_i, (A_i A_k) ∩ (E_ij E_jk)].
cplx face_value(const MarkedTetra& T, int i, int j, int k);
// Same with the line (A_j A_k) in place of (A_i A_k); degenerate by construction.
cplx face_value_alt(const MarkedTetra& T, int i, int j, int k);

cplx edge_cross_ratio(const MarkedTetra& T, int i, int j);  // [A_i, E_ij, A_j, E_ji]

struct LiftData {
    std::array<cplx, 6> a{};  // ã_ij in edge-slot order
    double residual = 0.0;    // worst face mismatch
};

LiftData lift_data(const MarkedTetra& T);

// Multiplicative map on a sublattice of Q(E8): v -> Π base_s^{d_s}.
struct CharacterHom {
    std::array<cplx, 8> base{1, 1, 1, 1, 1, 1, 1, 1};
    SubSystem tag = SubSystem::E7L;

    cplx operator()(const LatticeVec& v) const;
    cplx eval_unchecked(const LatticeVec& v) const;
    // Lift a function on the tagged sublattice to half-values by a sign search.
    static CharacterHom from_function(const std::function<cplx(const LatticeVec&)>& f, SubSystem tag,
                                      double tol = 1e-8);
    CharacterHom gauge_flip(int vertex) const;  // flips the three edges at a vertex
    CharacterHom compose(const WeylElem& w) const;  // v -> this(w v)
};

// Face half-sums ½(e_ij+e_jk+e_ik+e_∅) in the order 123,124,134,234.
const std::array<LatticeVec, 4>& face_vectors_L();
// Cycle half-sums in the order 1234,1324,1243.
const std::array<LatticeVec, 3>& cycle_vectors();
// D-images of the L faces: the A-side face vectors, in the order 123,124,134,234.
const std::array<LatticeVec, 4>& face_vectors_A();

CharacterHom length_function(const MarkedTetra& T);
CharacterHom angle_function(const MarkedTetra& T);
CharacterHom length_function_from_lift(const LiftData& lift);

// Dihedral angles from Gram cofactors, in edge-slot order.
std::array<double, 6> metric_angles_oracle(const MetricSpec& spec);

bool is_generic(const CharacterHom& L, double tol = 1e-8);

cplx det_L(const CharacterHom& L);          // 4x4 determinant form
cplx det_L_roots(const CharacterHom& L);    // root-sum expansion

enum class QuadricSign { Verbatim, Symmetric };

struct Reconstruction {
    MarkedTetra T;
    QuadricSign convention = QuadricSign::Symmetric;
    double verbatim_residual = 0.0;   // round-trip residual of the verbatim sign pattern
    double symmetric_residual = 0.0;  // same for the all-plus pattern
};

Mat4 reconstruction_quadric(const CharacterHom& L, QuadricSign sign);
MarkedTetra tetra_from_quadric_matrix(const Mat4& q, const CharacterHom& L, int orientation);
// Worst relative mismatch of length_function(T) against L on a generating set of Q(E7L).
double round_trip_residual(const MarkedTetra& T, const CharacterHom& L);
Reconstruction reconstruct_from_L(const CharacterHom& L, int orientation, double tol = 1e-8);

// Edge points marked E[0][1],E[1][0],... as a flat list of 12.
std::array<PointP3, 12> edge_points(const MarkedTetra& T);

}  // namespace tetratrig
