#include <algorithm>
#include <set>

#include "doctest.h"
#include "tetratrig/e8lattice.hpp"

using namespace tetratrig;

namespace {

// All lattice vectors with doubled squared length 4, by brute force.
std::vector<LatticeVec> brute_roots() {
    std::vector<LatticeVec> out;
    for (long code = 0; code < 390625; ++code) {
        LatticeVec v;
        long c = code;
        int sq = 0;
        for (int i = 0; i < 8; ++i, c /= 5) {
            v.d[i] = int(c % 5) - 2;
            sq += v.d[i] * v.d[i];
        }
        if (sq == 4 && in_lattice(v)) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("even subsets are named and combined consistently") {
    for (int s = 0; s < kAffCount; ++s) {
        CHECK(aff_index(aff_name(s)) == s);
        CHECK(aff_sum(s, s) == kEmpty);
        CHECK(aff_sum(s, kEmpty) == s);
        CHECK(aff_sum(s, aff_complement(s)) == kI);
    }
    CHECK(aff_complement(k12) == k34);
    CHECK(aff_sum(k12, k13) == k23);
    CHECK(aff_index("I") == kI);
    CHECK(aff_index("0") == kEmpty);
    CHECK(aff_index("15") == -1);
    CHECK(edge_index(0, 1) == k12);
    CHECK(edge_index(2, 3) == k34);
}

TEST_CASE("lattice membership and the pairing") {
    CHECK(in_lattice(LatticeVec::unit(k12)));
    CHECK(in_lattice(LatticeVec::half({{k12, 1}, {k13, 1}, {k23, 1}, {kEmpty, 1}})));
    LatticeVec bad;
    bad.d[0] = 1;
    CHECK_FALSE(in_lattice(bad));
    CHECK_THROWS_AS(inner(bad, bad), Error);
    CHECK(inner(LatticeVec::unit(k12), LatticeVec::unit(k12)) == -2);
    CHECK(inner(LatticeVec::unit(k12), LatticeVec::unit(k13)) == 0);
    LatticeVec h = LatticeVec::half({{k12, 1}, {k13, 1}, {k23, 1}, {kEmpty, 1}});
    CHECK(is_root(h));
    CHECK(inner(h, LatticeVec::unit(k12)) == -1);
    CHECK((h * 2).d == std::array<int, 8>{2, 2, 2, 0, 2, 0, 0, 0});
    CHECK((h - h).is_zero());
}

TEST_CASE("the 240 roots agree with brute-force enumeration") {
    auto brute = brute_roots();
    CHECK(brute.size() == 240);
    std::set<LatticeVec> a(roots().begin(), roots().end()), b(brute.begin(), brute.end());
    CHECK(a == b);
    for (const auto& r : roots()) CHECK(inner(r, r) == -2);
}

TEST_CASE("sub-systems: sizes, closure and duality") {
    auto l = sub_roots(SubSystem::E7L), a = sub_roots(SubSystem::E7A), d = sub_roots(SubSystem::D6);
    CHECK(l.size() == 126);
    CHECK(a.size() == 126);
    CHECK(d.size() == 60);
    std::size_t count_l = std::count_if(roots().begin(), roots().end(),
                                        [](const auto& r) { return in_sublattice(r, SubSystem::E7L); });
    CHECK(count_l == 126);
    std::set<LatticeVec> sl(l.begin(), l.end()), sa(a.begin(), a.end());
    for (const auto& r : d) CHECK((sl.count(r) && sa.count(r)));
    // reflections in E7L roots preserve E7L
    for (std::size_t i = 0; i < l.size(); i += 7)
        for (const auto& v : l) CHECK(sl.count(reflect(l[i], v)) == 1);
    // D swaps the two E7 systems and is an isometric involution
    for (const auto& r : l) {
        CHECK(sa.count(duality_D(r)) == 1);
        CHECK(duality_D(duality_D(r)) == r);
    }
    for (std::size_t i = 0; i < 240; i += 17)
        for (std::size_t j = 0; j < 240; j += 13)
            CHECK(inner(duality_D(roots()[i]), duality_D(roots()[j])) == inner(roots()[i], roots()[j]));
}

TEST_CASE("affine planes: fourteen 4-sets closed under symmetric difference") {
    auto planes = affine_planes();
    CHECK(planes.size() == 14);
    std::set<std::array<int, 4>> uniq;
    for (auto p : planes) {
        CHECK(aff_sum(aff_sum(p[0], p[1]), aff_sum(p[2], p[3])) == kEmpty);
        std::sort(p.begin(), p.end());
        uniq.insert(p);
    }
    CHECK(uniq.size() == 14);
}

TEST_CASE("reflections are isometric involutions") {
    const auto& rs = roots();
    for (std::size_t i = 0; i < rs.size(); i += 11) {
        const auto& r = rs[i];
        CHECK(reflect(r, r) == -r);
        for (std::size_t j = 0; j < rs.size(); j += 9) {
            LatticeVec v = reflect(r, rs[j]);
            CHECK(reflect(r, v) == rs[j]);
            CHECK(is_root(v));
        }
    }
    WeylElem w = WeylElem::reflection(rs[5]);
    for (const auto& v : rs) CHECK(w.apply(v) == reflect(rs[5], v));
    CHECK(w.compose(w) == WeylElem::identity());
}

TEST_CASE("W(D6) has order 23040 and acts by isometries") {
    const auto& W = WeylD6::instance();
    CHECK(W.order() == 23040);
    CHECK(W.contains(WeylElem::identity()));
    std::mt19937_64 rng(11);
    auto d6 = sub_roots(SubSystem::D6);
    std::set<LatticeVec> sd(d6.begin(), d6.end());
    for (int t = 0; t < 20; ++t) {
        const WeylElem& g = W.random_element(rng);
        const WeylElem& h = W.random_element(rng);
        CHECK(W.contains(g.compose(h)));
        for (const auto& r : d6) CHECK(sd.count(g.apply(r)) == 1);
        for (std::size_t i = 0; i < 240; i += 31) CHECK(inner(g.apply(roots()[i]), g.apply(roots()[i + 1])) ==
                                                        inner(roots()[i], roots()[i + 1]));
    }
}

TEST_CASE("the Regge element reproduces the length formulas") {
    LatticeVec r = regge_root();
    CHECK(is_root(r));
    CHECK(in_sublattice(r, SubSystem::D6));
    WeylElem g = regge_element();
    CHECK(g == edge_sign_flip().compose(regge_reflection()));
    // Σ l_ij e_ij with l = (1..6): 12 and 34 fixed, the others become half the sum of the rest minus themselves
    std::array<double, 6> l{1, 2, 3, 4, 5, 6}, expect{1, 5, 4, 3, 2, 6};
    for (int k = 0; k < 6; ++k) {
        double v = 0;
        for (int j = 0; j < 6; ++j) v += 0.5 * g.at(k + 1, j + 1) * l[j];
        CHECK(v == doctest::Approx(expect[k]));
    }
    CHECK(g.compose(g) == WeylElem::identity());
}
