#include "tetratrig/e8lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace tetratrig {

namespace {

constexpr std::array<unsigned, 8> kMasks{0x0, 0x3, 0x5, 0x9, 0x6, 0xA, 0xC, 0xF};
constexpr std::array<const char*, 8> kNames{"0", "12", "13", "14", "23", "24", "34", "I"};

// Odd-coordinate patterns allowed in the code: ∅, everything, or an affine plane.
bool in_code(unsigned pattern) {
    if (pattern == 0 || pattern == 0xFF) return true;
    for (const auto& p : affine_planes()) {
        unsigned m = 0;
        for (int s : p) m |= 1u << s;
        if (m == pattern) return true;
    }
    return false;
}

}  // namespace

const char* aff_name(int s) { return kNames.at(s); }

int aff_index(const std::string& name) {
    if (name == "∅" || name == "empty" || name == "0") return kEmpty;
    for (int s = 1; s < 8; ++s)
        if (name == kNames[s]) return s;
    return -1;
}

unsigned aff_mask(int s) { return kMasks.at(s); }

int aff_sum(int a, int b) {
    unsigned m = kMasks.at(a) ^ kMasks.at(b);
    for (int s = 0; s < 8; ++s)
        if (kMasks[s] == m) return s;
    return -1;
}

int aff_complement(int s) { return 7 - s; }

int edge_index(int i, int j) {
    if (i > j) std::swap(i, j);
    unsigned m = (1u << i) | (1u << j);
    for (int s = 1; s < 7; ++s)
        if (kMasks[s] == m) return s;
    return -1;
}

LatticeVec LatticeVec::unit(int s, int sign) {
    LatticeVec v;
    v.d.at(s) = 2 * sign;
    return v;
}

LatticeVec LatticeVec::half(std::initializer_list<std::pair<int, int>> terms) {
    LatticeVec v;
    for (auto [s, sg] : terms) v.d.at(s) += sg;
    return v;
}

LatticeVec LatticeVec::operator+(const LatticeVec& o) const {
    LatticeVec r;
    for (int i = 0; i < 8; ++i) r.d[i] = d[i] + o.d[i];
    return r;
}

LatticeVec LatticeVec::operator-(const LatticeVec& o) const {
    LatticeVec r;
    for (int i = 0; i < 8; ++i) r.d[i] = d[i] - o.d[i];
    return r;
}

LatticeVec LatticeVec::operator-() const { return *this * -1; }

LatticeVec LatticeVec::operator*(int k) const {
    LatticeVec r;
    for (int i = 0; i < 8; ++i) r.d[i] = d[i] * k;
    return r;
}

bool LatticeVec::is_zero() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

std::string LatticeVec::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 8; ++i) os << (i ? "," : "") << d[i];
    os << "]";
    return os.str();
}

bool in_lattice(const LatticeVec& v) {
    unsigned pattern = 0;
    for (int i = 0; i < 8; ++i)
        if (v.d[i] & 1) pattern |= 1u << i;
    return in_code(pattern);
}

int inner(const LatticeVec& v, const LatticeVec& w) {
    if (!in_lattice(v) || !in_lattice(w))
        throw Error(ErrorKind::NotInLattice, v.str() + " / " + w.str());
    int s = 0;
    for (int i = 0; i < 8; ++i) s += v.d[i] * w.d[i];
    return -s / 2;
}

bool is_root(const LatticeVec& v) { return in_lattice(v) && inner(v, v) == -2; }

std::vector<std::array<int, 4>> affine_planes() {
    static const std::vector<std::array<int, 4>> planes = [] {
        std::vector<std::array<int, 4>> out;
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = b + 1; c < 8; ++c)
                    for (int d = c + 1; d < 8; ++d) {
                        std::array<int, 4> p{a, b, c, d};
                        bool closed = true;
                        for (int x : p)
                            for (int y : p)
                                for (int z : p)
                                    if (std::find(p.begin(), p.end(), aff_sum(aff_sum(x, y), z)) == p.end())
                                        closed = false;
                        if (closed) out.push_back(p);
                    }
        return out;
    }();
    return planes;
}

const std::vector<LatticeVec>& roots() {
    static const std::vector<LatticeVec> all = [] {
        std::vector<LatticeVec> out;
        for (int s = 0; s < 8; ++s) {
            out.push_back(LatticeVec::unit(s, 1));
            out.push_back(LatticeVec::unit(s, -1));
        }
        for (const auto& p : affine_planes())
            for (int signs = 0; signs < 16; ++signs) {
                LatticeVec v;
                for (int k = 0; k < 4; ++k) v.d[p[k]] = (signs >> k) & 1 ? -1 : 1;
                out.push_back(v);
            }
        return out;
    }();
    return all;
}

bool in_sublattice(const LatticeVec& v, SubSystem kind) {
    int a = inner(v, LatticeVec::unit(kI));
    int b = inner(v, LatticeVec::unit(kEmpty));
    switch (kind) {
        case SubSystem::E7L: return a == 0;
        case SubSystem::E7A: return b == 0;
        case SubSystem::D6: return a == 0 && b == 0;
    }
    return false;
}

std::vector<LatticeVec> sub_roots(SubSystem kind) {
    std::vector<LatticeVec> out;
    for (const auto& r : roots())
        if (in_sublattice(r, kind)) out.push_back(r);
    return out;
}

LatticeVec reflect(const LatticeVec& r, const LatticeVec& v) {
    if (!is_root(r)) throw Error(ErrorKind::NotARoot, r.str());
    return v + r * inner(v, r);
}

LatticeVec duality_D(const LatticeVec& v) {
    LatticeVec r;
    for (int s = 0; s < 8; ++s) r.d[aff_complement(s)] = v.d[s];
    return r;
}

WeylElem WeylElem::identity() {
    WeylElem w;
    for (int i = 0; i < 8; ++i) w.n[i * 8 + i] = 2;
    return w;
}

WeylElem WeylElem::reflection(const LatticeVec& r) {
    if (!is_root(r)) throw Error(ErrorKind::NotARoot, r.str());
    // M = I - ½ d_r d_r^T in doubled coordinates
    WeylElem w = identity();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) w.n[i * 8 + j] -= r.d[i] * r.d[j];
    return w;
}

LatticeVec WeylElem::apply(const LatticeVec& v) const {
    LatticeVec r;
    for (int i = 0; i < 8; ++i) {
        int s = 0;
        for (int j = 0; j < 8; ++j) s += n[i * 8 + j] * v.d[j];
        if (s % 2 != 0) throw Error(ErrorKind::NotInLattice, "non-integral image");
        r.d[i] = s / 2;
    }
    return r;
}

WeylElem WeylElem::compose(const WeylElem& inner_) const {
    WeylElem w;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int s = 0;
            for (int k = 0; k < 8; ++k) s += n[i * 8 + k] * inner_.n[k * 8 + j];
            w.n[i * 8 + j] = s / 2;
        }
    w.word = word;
    w.word.insert(w.word.end(), inner_.word.begin(), inner_.word.end());
    return w;
}

const WeylD6& WeylD6::instance() {
    static const WeylD6 group;
    return group;
}

WeylD6::WeylD6() {
    for (const auto& r : sub_roots(SubSystem::D6))
        if (-r < r) gens_.push_back(r);
    std::vector<WeylElem> refl;
    for (const auto& r : gens_) refl.push_back(WeylElem::reflection(r));

    std::map<std::array<int, 64>, std::size_t> seen;
    std::deque<std::size_t> queue;
    elems_.push_back(WeylElem::identity());
    seen.emplace(elems_[0].n, 0);
    queue.push_back(0);
    while (!queue.empty()) {
        std::size_t k = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < refl.size(); ++g) {
            WeylElem next = refl[g].compose(elems_[k]);
            next.word = elems_[k].word;
            next.word.insert(next.word.begin(), static_cast<int>(g));
            if (seen.count(next.n)) continue;
            seen.emplace(next.n, elems_.size());
            queue.push_back(elems_.size());
            elems_.push_back(std::move(next));
        }
    }
    for (const auto& [key, idx] : seen) sorted_.push_back(key);
}

bool WeylD6::contains(const WeylElem& w) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), w.n);
}

const WeylElem& WeylD6::random_element(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> dist(0, elems_.size() - 1);
    return elems_[dist(rng)];
}

std::vector<std::size_t> WeylD6::stabilizer_of_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        bool ok = true;
        for (int j = 1; j < 7 && ok; ++j) {
            int nonzero = 0;
            for (int i = 0; i < 8; ++i) {
                int x = elems_[k].at(i, j);
                if (x == 0) continue;
                if ((x != 2 && x != -2) || i == kEmpty || i == kI) ok = false;
                ++nonzero;
            }
            if (nonzero != 1) ok = false;
        }
        if (ok) out.push_back(k);
    }
    return out;
}

LatticeVec regge_root() { return LatticeVec::half({{k13, 1}, {k14, 1}, {k23, 1}, {k24, 1}}); }

WeylElem edge_sign_flip() {
    WeylElem w = WeylElem::identity();
    for (int s : {k13, k14, k23, k24}) w.n[s * 8 + s] = -2;
    return w;
}

WeylElem regge_reflection() { return WeylElem::reflection(regge_root()); }

WeylElem regge_element() { return edge_sign_flip().compose(regge_reflection()); }

}  // namespace tetratrig
