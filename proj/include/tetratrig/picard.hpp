#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tetratrig/e8lattice.hpp"

namespace tetratrig {

// Basis L, R, E12, E21, E13, E31, E14, E41, E23, E32, E24, E42, E34, E43.
struct RTClass {
    std::array<int, 14> c{};

    static RTClass L();
    static RTClass R();
    static RTClass E(int i, int j);  // 0-based vertices, i ≠ j

    RTClass operator+(const RTClass& o) const;
    RTClass operator-(const RTClass& o) const;
    RTClass operator*(int k) const;
    bool operator==(const RTClass& o) const { return c == o.c; }
    std::string str() const;
};

// Basis l, r, u13, u31, u14, u41, u23, u32, u24, u42.
struct PicClass {
    std::array<int, 10> c{};

    static PicClass l();
    static PicClass r();
    static PicClass u(int i, int j);  // 0-based vertices; throws NotInComplement for a blown-down point

    PicClass operator+(const PicClass& o) const;
    PicClass operator-(const PicClass& o) const;
    PicClass operator-() const { return *this * -1; }
    PicClass operator*(int k) const;
    bool operator==(const PicClass& o) const { return c == o.c; }
    bool operator<(const PicClass& o) const { return c < o.c; }
    std::string str() const;
};

const char* rt_basis_name(int k);
const char* pic_basis_name(int k);

int rt_pairing(const RTClass& a, const RTClass& b);
int pic_pairing(const PicClass& a, const PicClass& b);

std::vector<std::vector<long long>> rt_gram();
std::vector<std::vector<long long>> pic_gram();
// (positive, negative) counts by congruence diagonalization over Q.
std::pair<int, int> signature(const std::vector<std::vector<long long>>& gram);

PicClass canonical_class();
PicClass fiber_class();  // f = -K

// E21, L-E12, R-E12, L+R-E34-E43-E12
const std::array<RTClass, 4>& blown_down_classes();
PicClass blow_down(const RTClass& x, bool strict = false);

// Strict transform of H_plane ∩ Q: L + R minus the six marked points on the face.
RTClass face_strict_transform(int plane);

struct FiberComponents {
    PicClass F11, F12, F21, F22;  // from H3, H4, H1, H2
};
FiberComponents fiber_component_classes();

struct MarkingNode {
    std::string label;
    PicClass pic;
    LatticeVec e8;
};

// Nodes in the order: chain end, second, branch point, branch leaf, then the four chain nodes.
struct MarkingIso {
    std::array<MarkingNode, 8> nodes;
};

MarkingIso marking_iso_fig4();

// Conic bundle B; over p_{k+1} the fiber component b1[k] meets F11 and b2[k] meets F21.
struct BAssignment {
    PicClass B;
    std::array<PicClass, 8> b1, b2;
};

MarkingIso marking_iso_fig3(const BAssignment& b);

// Image in Q(E8) of c mod f under the reference marking; throws NotInFPerp.
LatticeVec project_mod_f(const PicClass& c);
// Same under an arbitrary marking.
LatticeVec project_mod_f(const PicClass& c, const MarkingIso& m);

struct TwoBCheck {
    bool ok = false;
    PicClass residual;  // 2B - (Σ comps + F11 - F22)
};
TwoBCheck verify_2B(const PicClass& B, const std::array<PicClass, 4>& comps);
// Every choice of four singular fibers of B and one component in each that satisfies the 2B identity.
std::vector<std::array<PicClass, 4>> search_2B(const PicClass& B);

// Orderings of the singular fibers of B (components fixed by which of F11, F21 they meet) for which
// the bundle marking sends F21 to e_∅, the 2B identity holds and the fiber-component table holds under it.
std::vector<BAssignment> search_assignments(const PicClass& B);
// Number of assignments whose bundle marking agrees with the reference marking.
int count_fig4_compatible(const PicClass& B);

struct IdentityResult {
    std::string name;
    LatticeVec lhs, rhs;
    bool ok = false;
};

struct Section34Report {
    std::vector<IdentityResult> items;
    int assignments_found = 0;
    int fig4_compatible = 0;
    bool cycle_rows_fixed_by_D = false;  // rows 5-7
    bool dictionary_ok = false;          // rows 1-4 are faces minus e_∅, rows 5-7 cycles
    bool all_ok = false;
    BAssignment assignment;
};
Section34Report verify_section34_identities();

enum class CurveKind { Section, FiberComponent, Fiber, Other };
const char* curve_kind_name(CurveKind k);
CurveKind classify(const PicClass& c);

struct MinimalVectorReport {
    std::size_t representatives = 0;  // vectors found in the search box
    std::size_t classes = 0;          // distinct images mod f
    bool bijective = false;
    bool even = false, unimodular = false;
};
MinimalVectorReport minimal_vectors_check();

}  // namespace tetratrig
