#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tetratrig/errors.hpp"

namespace tetratrig {

// Even subsets of {1,2,3,4} in the fixed order ∅,12,13,14,23,24,34,I.
constexpr int kAffCount = 8;
constexpr int kEmpty = 0, k12 = 1, k13 = 2, k14 = 3, k23 = 4, k24 = 5, k34 = 6, kI = 7;

const char* aff_name(int s);
int aff_index(const std::string& name);  // accepts "0"/"∅"/"12"/.../"I"; -1 if unknown
unsigned aff_mask(int s);                 // bit k-1 set for element k
int aff_sum(int a, int b);                // symmetric difference
int aff_complement(int s);
int edge_index(int i, int j);  // vertices 0..3 -> index of e_{i+1,j+1}

// Σ (d_s/2) e_s; d holds doubled coordinates.
struct LatticeVec {
    std::array<int, 8> d{};

    static LatticeVec unit(int s, int sign = 1);
    // ½ Σ sign_k e_{s_k}
    static LatticeVec half(std::initializer_list<std::pair<int, int>> terms);

    LatticeVec operator+(const LatticeVec& o) const;
    LatticeVec operator-(const LatticeVec& o) const;
    LatticeVec operator-() const;
    LatticeVec operator*(int k) const;
    bool operator==(const LatticeVec& o) const { return d == o.d; }
    bool operator!=(const LatticeVec& o) const { return d != o.d; }
    bool operator<(const LatticeVec& o) const { return d < o.d; }
    bool is_zero() const;
    std::string str() const;
};

bool in_lattice(const LatticeVec& v);
int inner(const LatticeVec& v, const LatticeVec& w);  // -½ Σ d d'; throws NotInLattice
bool is_root(const LatticeVec& v);

std::vector<std::array<int, 4>> affine_planes();
const std::vector<LatticeVec>& roots();

enum class SubSystem { E7L, E7A, D6 };
std::vector<LatticeVec> sub_roots(SubSystem kind);
bool in_sublattice(const LatticeVec& v, SubSystem kind);

LatticeVec reflect(const LatticeVec& r, const LatticeVec& v);
LatticeVec duality_D(const LatticeVec& v);

// Doubled matrix N = 2M of a lattice isometry M; acts by d -> N d / 2.
struct WeylElem {
    std::array<int, 64> n{};
    std::vector<int> word;  // generator indices, applied right to left

    static WeylElem identity();
    static WeylElem reflection(const LatticeVec& r);
    LatticeVec apply(const LatticeVec& v) const;
    WeylElem compose(const WeylElem& inner) const;  // this ∘ inner
    int at(int i, int j) const { return n[i * 8 + j]; }
    bool operator==(const WeylElem& o) const { return n == o.n; }
};

// W(D6) built once by breadth-first closure over reflections in the positive D6 roots.
class WeylD6 {
public:
    static const WeylD6& instance();

    std::size_t order() const { return elems_.size(); }
    const WeylElem& element(std::size_t k) const { return elems_[k]; }
    const std::vector<LatticeVec>& generator_roots() const { return gens_; }
    bool contains(const WeylElem& w) const;
    const WeylElem& random_element(std::mt19937_64& rng) const;
    // Elements permuting {±e_ij} among themselves.
    std::vector<std::size_t> stabilizer_of_edges() const;

private:
    WeylD6();
    std::vector<LatticeVec> gens_;
    std::vector<WeylElem> elems_;
    std::vector<std::array<int, 64>> sorted_;
};

// ½(e13+e14+e23+e24)
LatticeVec regge_root();
// Sign flip on the e13, e14, e23, e24 coordinates.
WeylElem edge_sign_flip();
WeylElem regge_reflection();
// The composite flip ∘ reflection; this is the one that reproduces the Regge formulas.
WeylElem regge_element();

}  // namespace tetratrig
