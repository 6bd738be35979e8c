#include "tetratrig/picard.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "tetratrig/rational.hpp"
#include "tetratrig/tetra.hpp"

namespace tetratrig {

namespace {

// Ordered pairs (0-based) of the E-classes after L, R.
constexpr std::array<std::array<int, 2>, 12> kRTPairs{
    {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}};
constexpr std::array<const char*, 14> kRTNames{"L",   "R",   "E12", "E21", "E13", "E31", "E14",
                                               "E41", "E23", "E32", "E24", "E42", "E34", "E43"};
// Surviving points after L, R.
constexpr std::array<std::array<int, 2>, 8> kPicPairs{{{0, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 1}, {1, 3}, {3, 1}}};
constexpr std::array<const char*, 10> kPicNames{"l", "r", "u13", "u31", "u14", "u41", "u23", "u32", "u24", "u42"};

int rt_index(int i, int j) {
    for (int k = 0; k < 12; ++k)
        if (kRTPairs[k][0] == i && kRTPairs[k][1] == j) return 2 + k;
    throw Error(ErrorKind::DegenerateConfiguration, "no such marked point");
}

template <std::size_t N>
std::string class_str(const std::array<int, N>& c, const std::array<const char*, N>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < N; ++k) {
        if (c[k] == 0) continue;
        int a = c[k] < 0 ? -c[k] : c[k];
        if (!first || c[k] < 0) os << (c[k] < 0 ? "-" : "+");
        if (a != 1) os << a;
        os << names[k];
        first = false;
    }
    return first ? "0" : os.str();
}

RTClass rt_l() { return RTClass::L() + RTClass::R() - RTClass::E(0, 1) - RTClass::E(2, 3); }
RTClass rt_r() { return RTClass::L() + RTClass::R() - RTClass::E(0, 1) - RTClass::E(3, 2); }

LatticeVec e8(std::initializer_list<std::pair<int, int>> t) { return LatticeVec::half(t); }

// Reference marking data, in node order.
struct Fig4Data {
    std::array<PicClass, 8> pic;
    std::array<LatticeVec, 8> vec;
    std::array<std::string, 8> label;
};

const Fig4Data& fig4_data() {
    static const Fig4Data data = [] {
        auto u = PicClass::u;
        PicClass l = PicClass::l(), r = PicClass::r();
        Fig4Data d;
        d.pic = {-l - r + u(1, 3) + u(3, 1) + u(0, 3) + u(3, 0),
                 -l + u(0, 2) + u(2, 0),
                 l - u(1, 3) - u(0, 2),
                 l + r - u(1, 2) - u(2, 0) - u(0, 3) - u(3, 1),
                 l + r - u(2, 0) - u(2, 1) - u(3, 0) - u(3, 1),
                 r - u(0, 2) - u(0, 3),
                 l + r - u(1, 2) - u(2, 0) - u(3, 0) - u(1, 3),
                 l - u(2, 1) - u(0, 3)};
        d.vec = {LatticeVec::unit(kI, -1),
                 e8({{k34, -1}, {k12, 1}, {kEmpty, 1}, {kI, 1}}),
                 e8({{k13, 1}, {k34, 1}, {k12, -1}, {k24, -1}}),
                 e8({{k23, 1}, {k24, 1}, {k13, -1}, {k14, -1}}),
                 e8({{k14, 1}, {k24, 1}, {k13, -1}, {k23, -1}}),
                 e8({{k13, 1}, {k14, -1}, {k34, -1}, {kEmpty, -1}}),
                 e8({{k14, 1}, {k23, 1}, {k13, -1}, {k24, -1}}),
                 e8({{k12, 1}, {k34, 1}, {k14, -1}, {k23, -1}})};
        for (int k = 0; k < 8; ++k) d.label[k] = d.pic[k].str();
        return d;
    }();
    return data;
}

void check_gram(const MarkingIso& m) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int a = pic_pairing(m.nodes[i].pic, m.nodes[j].pic);
            int b = inner(m.nodes[i].e8, m.nodes[j].e8);
            if (a != b)
                throw Error(ErrorKind::GramMismatch, "nodes " + std::to_string(i) + "," + std::to_string(j) + ": " +
                                                         std::to_string(a) + " vs " + std::to_string(b));
        }
}

using RatMat8 = std::array<std::array<Rational, 8>, 8>;

// Exact inverse of the Gram matrix of a marking's Picard nodes.
RatMat8 gram_inverse(const MarkingIso& m) {
    std::array<std::array<Rational, 16>, 8> a;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 16; ++j)
            a[i][j] = j < 8 ? Rational(pic_pairing(m.nodes[i].pic, m.nodes[j].pic)) : Rational(j - 8 == i ? 1 : 0);
    for (int col = 0; col < 8; ++col) {
        int piv = col;
        while (piv < 8 && a[piv][col].is_zero()) ++piv;
        if (piv == 8) throw Error(ErrorKind::GramMismatch, "marking Gram matrix is singular");
        std::swap(a[piv], a[col]);
        Rational p = a[col][col];
        for (auto& x : a[col]) x = x / p;
        for (int i = 0; i < 8; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (int j = 0; j < 16; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    RatMat8 out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i][j] = a[i][8 + j];
    return out;
}

LatticeVec project_with(const PicClass& c, const MarkingIso& m, const RatMat8& inv) {
    if (pic_pairing(c, canonical_class()) != 0) throw Error(ErrorKind::NotInFPerp, c.str());
    std::array<int, 8> y;
    for (int j = 0; j < 8; ++j) y[j] = pic_pairing(c, m.nodes[j].pic);
    PicClass rest = c;
    LatticeVec out;
    for (int i = 0; i < 8; ++i) {
        Rational n;
        for (int j = 0; j < 8; ++j) n = n + inv[i][j] * Rational(y[j]);
        if (!n.is_integer()) throw Error(ErrorKind::ConsistencyFailure, "non-integral coordinates mod f");
        int k = int(n.n);
        rest = rest - m.nodes[i].pic * k;
        out = out + m.nodes[i].e8 * k;
    }
    if (!(rest == fiber_class() * (rest.c[0] / 2)))
        throw Error(ErrorKind::ConsistencyFailure, "remainder is not a multiple of f");
    return out;
}

const MarkingIso& fig4_iso() {
    static const MarkingIso m = marking_iso_fig4();
    return m;
}

const RatMat8& fig4_inverse() {
    static const RatMat8 inv = gram_inverse(fig4_iso());
    return inv;
}

// Rows of the fiber-component table: b1 differences and (negated) b2 differences.
const std::array<LatticeVec, 7>& table_b1() {
    static const std::array<LatticeVec, 7> v{
        e8({{k23, 1}, {k24, 1}, {k34, 1}, {kEmpty, -1}}), e8({{k13, 1}, {k14, 1}, {k34, 1}, {kEmpty, -1}}),
        e8({{k12, 1}, {k14, 1}, {k24, 1}, {kEmpty, -1}}), e8({{k12, 1}, {k13, 1}, {k23, 1}, {kEmpty, -1}}),
        e8({{k12, 1}, {k14, 1}, {k23, 1}, {k34, 1}}),     e8({{k12, 1}, {k13, 1}, {k24, 1}, {k34, 1}}),
        e8({{k13, 1}, {k14, 1}, {k23, 1}, {k24, 1}})};
    return v;
}

const std::array<LatticeVec, 7>& table_b2() {
    static const std::array<LatticeVec, 7> v{
        e8({{k12, 1}, {k13, 1}, {k14, 1}, {kI, 1}}),  e8({{k12, 1}, {k23, 1}, {k24, 1}, {kI, 1}}),
        e8({{k13, 1}, {k23, 1}, {k34, 1}, {kI, 1}}),  e8({{k14, 1}, {k24, 1}, {k34, 1}, {kI, 1}}),
        e8({{k12, 1}, {k14, 1}, {k23, 1}, {k34, 1}}), e8({{k12, 1}, {k13, 1}, {k24, 1}, {k34, 1}}),
        e8({{k13, 1}, {k14, 1}, {k23, 1}, {k24, 1}})};
    return v;
}

std::vector<IdentityResult> table_results(const BAssignment& b, const MarkingIso& m) {
    RatMat8 inv = gram_inverse(m);
    std::vector<IdentityResult> out;
    for (int k = 0; k < 7; ++k) {
        std::string p = std::to_string(k + 1);
        IdentityResult r1{"b1_p" + p + " - b1_p8", table_b1()[k], project_with(b.b1[k] - b.b1[7], m, inv), false};
        r1.ok = r1.lhs == r1.rhs;
        IdentityResult r2{"-(b2_p" + p + " - b2_p8)", table_b2()[k], -project_with(b.b2[k] - b.b2[7], m, inv), false};
        r2.ok = r2.lhs == r2.rhs;
        out.push_back(r1);
        out.push_back(r2);
    }
    return out;
}

// Fibers of B ordered with the four b1 = b2 fibers first; components fixed by F11 and F21.
BAssignment fiber_data(const PicClass& B) {
    FiberComponents F = fiber_component_classes();
    std::vector<std::pair<PicClass, PicClass>> same, differ;
    for (int k = 0; k < 8; ++k) {
        PicClass u;
        u.c[2 + k] = 1;
        if (pic_pairing(u, B) != 0) throw Error(ErrorKind::ConsistencyFailure, "B is not a conic bundle over the u");
        std::array<PicClass, 2> comp{u, B - u};
        auto meeting = [&](const PicClass& F1) {
            int n = 0;
            PicClass hit;
            for (const auto& c : comp)
                if (pic_pairing(c, F1) == 1) ++n, hit = c;
            if (n != 1) throw Error(ErrorKind::ConsistencyFailure, "a fiber section meets both or no components");
            return hit;
        };
        PicClass b1 = meeting(F.F11), b2 = meeting(F.F21);
        (b1 == b2 ? same : differ).push_back({b1, b2});
    }
    if (same.size() != 4) throw Error(ErrorKind::ConsistencyFailure, "expected four fibers with b1 = b2");
    BAssignment a;
    a.B = B;
    for (int k = 0; k < 4; ++k) {
        a.b1[k] = same[k].first, a.b2[k] = same[k].second;
        a.b1[4 + k] = differ[k].first, a.b2[4 + k] = differ[k].second;
    }
    return a;
}

template <typename F>
void for_each_ordering(const BAssignment& base, F&& visit) {
    std::array<int, 4> p{0, 1, 2, 3}, q{0, 1, 2, 3};
    do {
        do {
            BAssignment a = base;
            for (int k = 0; k < 4; ++k) {
                a.b1[k] = base.b1[p[k]], a.b2[k] = base.b2[p[k]];
                a.b1[4 + k] = base.b1[4 + q[k]], a.b2[4 + k] = base.b2[4 + q[k]];
            }
            visit(a);
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

RTClass RTClass::L() {
    RTClass x;
    x.c[0] = 1;
    return x;
}

RTClass RTClass::R() {
    RTClass x;
    x.c[1] = 1;
    return x;
}

RTClass RTClass::E(int i, int j) {
    RTClass x;
    x.c[rt_index(i, j)] = 1;
    return x;
}

RTClass RTClass::operator+(const RTClass& o) const {
    RTClass x;
    for (int k = 0; k < 14; ++k) x.c[k] = c[k] + o.c[k];
    return x;
}

RTClass RTClass::operator-(const RTClass& o) const { return *this + o * -1; }

RTClass RTClass::operator*(int s) const {
    RTClass x;
    for (int k = 0; k < 14; ++k) x.c[k] = c[k] * s;
    return x;
}

std::string RTClass::str() const { return class_str(c, kRTNames); }

PicClass PicClass::l() {
    PicClass x;
    x.c[0] = 1;
    return x;
}

PicClass PicClass::r() {
    PicClass x;
    x.c[1] = 1;
    return x;
}

PicClass PicClass::u(int i, int j) {
    for (int k = 0; k < 8; ++k)
        if (kPicPairs[k][0] == i && kPicPairs[k][1] == j) {
            PicClass x;
            x.c[2 + k] = 1;
            return x;
        }
    throw Error(ErrorKind::NotInComplement, "the point is blown down");
}

PicClass PicClass::operator+(const PicClass& o) const {
    PicClass x;
    for (int k = 0; k < 10; ++k) x.c[k] = c[k] + o.c[k];
    return x;
}

PicClass PicClass::operator-(const PicClass& o) const { return *this + o * -1; }

PicClass PicClass::operator*(int s) const {
    PicClass x;
    for (int k = 0; k < 10; ++k) x.c[k] = c[k] * s;
    return x;
}

std::string PicClass::str() const { return class_str(c, kPicNames); }

const char* rt_basis_name(int k) { return kRTNames.at(k); }
const char* pic_basis_name(int k) { return kPicNames.at(k); }

int rt_pairing(const RTClass& a, const RTClass& b) {
    int s = a.c[0] * b.c[1] + a.c[1] * b.c[0];
    for (int k = 2; k < 14; ++k) s -= a.c[k] * b.c[k];
    return s;
}

int pic_pairing(const PicClass& a, const PicClass& b) {
    int s = a.c[0] * b.c[1] + a.c[1] * b.c[0];
    for (int k = 2; k < 10; ++k) s -= a.c[k] * b.c[k];
    return s;
}

std::vector<std::vector<long long>> rt_gram() {
    std::vector<std::vector<long long>> g(14, std::vector<long long>(14));
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) {
            RTClass a, b;
            a.c[i] = 1;
            b.c[j] = 1;
            g[i][j] = rt_pairing(a, b);
        }
    return g;
}

std::vector<std::vector<long long>> pic_gram() {
    std::vector<std::vector<long long>> g(10, std::vector<long long>(10));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            PicClass a, b;
            a.c[i] = 1;
            b.c[j] = 1;
            g[i][j] = pic_pairing(a, b);
        }
    return g;
}

std::pair<int, int> signature(const std::vector<std::vector<long long>>& gram) {
    const std::size_t n = gram.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);
    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t j = k + 1;
            while (j < n && a[j][j].is_zero()) ++j;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (auto& row : a) std::swap(row[k], row[j]);
            } else {
                j = k + 1;
                while (j < n && a[k][j].is_zero()) ++j;
                if (j == n) continue;  // null direction
                // row/col k += row/col j
                for (std::size_t t = 0; t < n; ++t) a[k][t] = a[k][t] + a[j][t];
                for (std::size_t t = 0; t < n; ++t) a[t][k] = a[t][k] + a[t][j];
            }
        }
        Rational p = a[k][k];
        (p.sign() > 0 ? pos : neg)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational m = a[i][k] / p;
            for (std::size_t t = k; t < n; ++t) a[i][t] = a[i][t] - m * a[k][t];
            for (std::size_t t = k; t < n; ++t) a[t][i] = a[t][i] - m * a[t][k];
        }
    }
    return {pos, neg};
}

PicClass canonical_class() {
    PicClass k;
    k.c = {-2, -2, 1, 1, 1, 1, 1, 1, 1, 1};
    return k;
}

PicClass fiber_class() { return -canonical_class(); }

const std::array<RTClass, 4>& blown_down_classes() {
    static const std::array<RTClass, 4> c{RTClass::E(1, 0), RTClass::L() - RTClass::E(0, 1),
                                          RTClass::R() - RTClass::E(0, 1),
                                          RTClass::L() + RTClass::R() - RTClass::E(2, 3) - RTClass::E(3, 2) -
                                              RTClass::E(0, 1)};
    return c;
}

PicClass blow_down(const RTClass& x, bool strict) {
    RTClass p = x;
    for (const auto& c : blown_down_classes()) {
        int m = rt_pairing(x, c);
        if (strict && m != 0) throw Error(ErrorKind::NotInComplement, x.str() + " meets " + c.str());
        p = p + c * m;
    }
    PicClass out;
    out.c[0] = rt_pairing(p, rt_r());
    out.c[1] = rt_pairing(p, rt_l());
    RTClass back = rt_l() * out.c[0] + rt_r() * out.c[1];
    for (int k = 0; k < 8; ++k) {
        RTClass e = RTClass::E(kPicPairs[k][0], kPicPairs[k][1]);
        out.c[2 + k] = -rt_pairing(p, e);
        back = back + e * out.c[2 + k];
    }
    if (!(back == p)) throw Error(ErrorKind::ConsistencyFailure, "projection left the span of l, r, u");
    return out;
}

RTClass face_strict_transform(int plane) {
    RTClass x = RTClass::L() + RTClass::R();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && i != plane && j != plane) x = x - RTClass::E(i, j);
    return x;
}

FiberComponents fiber_component_classes() {
    FiberComponents F{blow_down(face_strict_transform(2)), blow_down(face_strict_transform(3)),
                      blow_down(face_strict_transform(0)), blow_down(face_strict_transform(1))};
    PicClass f = fiber_class();
    bool ok = F.F11 + F.F12 == f && F.F21 + F.F22 == f;
    for (const auto* c : {&F.F11, &F.F12, &F.F21, &F.F22}) ok = ok && pic_pairing(*c, *c) == -2;
    ok = ok && pic_pairing(F.F11, F.F12) == 2 && pic_pairing(F.F21, F.F22) == 2;
    // components of distinct fibers are disjoint
    for (const auto* a : {&F.F11, &F.F12})
        for (const auto* b : {&F.F21, &F.F22}) ok = ok && pic_pairing(*a, *b) == 0;
    if (!ok) throw Error(ErrorKind::ConsistencyFailure, "fiber component classes fail their pairings");
    return F;
}

MarkingIso marking_iso_fig4() {
    const auto& d = fig4_data();
    MarkingIso m;
    for (int k = 0; k < 8; ++k) m.nodes[k] = {d.label[k], d.pic[k], d.vec[k]};
    check_gram(m);
    return m;
}

MarkingIso marking_iso_fig3(const BAssignment& b) {
    const auto& d = fig4_data();
    const auto& x = b.b1;
    std::array<PicClass, 8> pic{-fiber_component_classes().F11, b.B - x[0] - x[1], x[1] - x[2], x[0] - x[1],
                                x[2] - x[3],                      x[3] - x[4],     x[4] - x[5], x[5] - x[6]};
    static const std::array<std::string, 8> labels{"-F11",       "B-b1_p1-b1_p2", "b1_p2-b1_p3", "b1_p1-b1_p2",
                                                   "b1_p3-b1_p4", "b1_p4-b1_p5",   "b1_p5-b1_p6", "b1_p6-b1_p7"};
    MarkingIso m;
    for (int k = 0; k < 8; ++k) m.nodes[k] = {labels[k], pic[k], d.vec[k]};
    check_gram(m);
    return m;
}

LatticeVec project_mod_f(const PicClass& c) { return project_with(c, fig4_iso(), fig4_inverse()); }

LatticeVec project_mod_f(const PicClass& c, const MarkingIso& m) { return project_with(c, m, gram_inverse(m)); }

TwoBCheck verify_2B(const PicClass& B, const std::array<PicClass, 4>& comps) {
    FiberComponents F = fiber_component_classes();
    PicClass rhs = F.F11 - F.F22;
    for (const auto& c : comps) rhs = rhs + c;
    TwoBCheck out;
    out.residual = B * 2 - rhs;
    out.ok = out.residual == PicClass{};
    return out;
}

std::vector<std::array<PicClass, 4>> search_2B(const PicClass& B) {
    std::vector<std::array<PicClass, 4>> out;
    for (unsigned m = 0; m < 256; ++m) {
        if (std::popcount(m) != 4) continue;
        std::array<int, 4> idx;
        int n = 0;
        for (int k = 0; k < 8; ++k)
            if (m >> k & 1) idx[n++] = k;
        for (unsigned side = 0; side < 16; ++side) {
            std::array<PicClass, 4> comps;
            for (int t = 0; t < 4; ++t) {
                PicClass u;
                u.c[2 + idx[t]] = 1;
                comps[t] = side >> t & 1 ? B - u : u;
            }
            if (verify_2B(B, comps).ok) out.push_back(comps);
        }
    }
    return out;
}

std::vector<BAssignment> search_assignments(const PicClass& B) {
    FiberComponents F = fiber_component_classes();
    std::vector<BAssignment> out;
    for_each_ordering(fiber_data(B), [&](const BAssignment& a) {
        if (!verify_2B(B, {a.b1[0], a.b1[1], a.b1[2], a.b1[3]}).ok) return;
        MarkingIso m;
        try {
            m = marking_iso_fig3(a);
        } catch (const Error&) {
            return;
        }
        if (!(project_mod_f(F.F21, m) == LatticeVec::unit(kEmpty))) return;
        for (const auto& r : table_results(a, m))
            if (!r.ok) return;
        out.push_back(a);
    });
    return out;
}

int count_fig4_compatible(const PicClass& B) {
    int n = 0;
    for_each_ordering(fiber_data(B), [&](const BAssignment& a) {
        MarkingIso m;
        try {
            m = marking_iso_fig3(a);
        } catch (const Error&) {
            return;
        }
        bool same = true;
        for (const auto& node : m.nodes) same = same && project_mod_f(node.pic) == node.e8;
        n += same;
    });
    return n;
}

Section34Report verify_section34_identities() {
    Section34Report rep;
    auto found = search_assignments(PicClass::l());
    rep.assignments_found = int(found.size());
    rep.fig4_compatible = count_fig4_compatible(PicClass::l());

    rep.cycle_rows_fixed_by_D = true;
    for (int k = 4; k < 7; ++k)
        rep.cycle_rows_fixed_by_D = rep.cycle_rows_fixed_by_D && duality_D(table_b1()[k]) == table_b1()[k];

    std::set<LatticeVec> faces(face_vectors_L().begin(), face_vectors_L().end());
    std::set<LatticeVec> cycles(cycle_vectors().begin(), cycle_vectors().end());
    std::set<LatticeVec> rows_f, rows_c;
    for (int k = 0; k < 4; ++k) rows_f.insert(table_b1()[k] + LatticeVec::unit(kEmpty));
    for (int k = 4; k < 7; ++k) rows_c.insert(table_b1()[k]);
    rep.dictionary_ok = rows_f == faces && rows_c == cycles;

    if (found.empty()) return rep;
    rep.assignment = found.front();
    rep.items = table_results(rep.assignment, marking_iso_fig3(rep.assignment));
    rep.all_ok = rep.cycle_rows_fixed_by_D && rep.dictionary_ok;
    for (const auto& r : rep.items) rep.all_ok = rep.all_ok && r.ok && is_root(r.lhs);
    return rep;
}

const char* curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Section: return "section";
        case CurveKind::FiberComponent: return "fiber_component";
        case CurveKind::Fiber: return "fiber";
        case CurveKind::Other: return "other";
    }
    return "other";
}

CurveKind classify(const PicClass& c) {
    PicClass f = fiber_class();
    int sq = pic_pairing(c, c), cf = pic_pairing(c, f);
    if (sq == -1 && cf == 1) return CurveKind::Section;
    if (sq == -2 && cf == 0) return CurveKind::FiberComponent;
    if (sq == 0 && cf == 0 && c == f * (c.c[0] / 2)) return CurveKind::Fiber;
    return CurveKind::Other;
}

MinimalVectorReport minimal_vectors_check() {
    MinimalVectorReport rep;
    const auto& d = fig4_data();
    {
        std::vector<std::vector<long long>> g(8, std::vector<long long>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) g[i][j] = pic_pairing(d.pic[i], d.pic[j]);
        rep.even = true;
        for (int i = 0; i < 8; ++i) rep.even = rep.even && g[i][i] % 2 == 0;
        auto sig = signature(g);
        // negative definite of rank 8 and det ±1 via the rational inverse being integral
        rep.unimodular = sig.second == 8;
        for (const auto& row : fig4_inverse())
            for (const auto& x : row) rep.unimodular = rep.unimodular && x.is_integer();
    }

    std::set<LatticeVec> images;
    std::array<int, 10> c;
    c.fill(-2);
    while (true) {
        int cf = 2 * c[0] + 2 * c[1];
        int sq = 2 * c[0] * c[1];
        for (int k = 2; k < 10; ++k) {
            cf += c[k];
            sq -= c[k] * c[k];
        }
        if (cf == 0 && sq == -2) {
            PicClass p;
            p.c = c;
            images.insert(project_mod_f(p));
            ++rep.representatives;
        }
        int k = 0;
        while (k < 10 && c[k] == 2) c[k++] = -2;
        if (k == 10) break;
        ++c[k];
    }
    rep.classes = images.size();
    std::set<LatticeVec> all(roots().begin(), roots().end());
    rep.bijective = images == all;
    return rep;
}

}  // namespace tetratrig
