#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "uqgl/errors.hpp"

namespace uqgl {

// Dimensions (M|N) of the underlying graded space. Indices 1..M are even,
// M+1..M+N are odd. M = N is rejected (the bilinear form degenerates).
struct Superdim {
    int M;
    int N;

    Superdim(int m, int n) : M(m), N(n) {
        if (m < 1 || n < 1)
            throw IndexOutOfRange("Superdim requires M >= 1 and N >= 1");
        if (m == n)
            throw IndexOutOfRange("Superdim requires M != N");
    }

    int total() const { return M + N; }
    friend bool operator==(const Superdim& a, const Superdim& b) {
        return a.M == b.M && a.N == b.N;
    }
    friend bool operator!=(const Superdim& a, const Superdim& b) { return !(a == b); }
};

inline void check_index(const Superdim& dim, int k) {
    if (k < 1 || k > dim.total())
        throw IndexOutOfRange("basis index " + std::to_string(k) + " outside 1.." +
                              std::to_string(dim.total()));
}

// Grading of basis index k: 0 for k <= M, 1 for k > M.
inline int parity_index(const Superdim& dim, int k) {
    check_index(dim, k);
    return k <= dim.M ? 0 : 1;
}

// Signature d_k = (-1)^{parity of k}.
inline int d_sign(const Superdim& dim, int k) {
    return parity_index(dim, k) == 0 ? 1 : -1;
}

// Positive root position (i, j) with i < j, standing for Xi_i - Xi_j.
struct RootIndex {
    int i;
    int j;
    friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

inline void check_root(const Superdim& dim, const RootIndex& r) {
    check_index(dim, r.i);
    check_index(dim, r.j);
    if (r.i >= r.j)
        throw NotStrictlyOrdered("root (" + std::to_string(r.i) + "," +
                                 std::to_string(r.j) + ") needs i < j");
}

inline bool is_simple_root(const RootIndex& r) { return r.j == r.i + 1; }

// Parity of the root vector at (i, j): odd exactly when i <= M < j.
inline int root_parity(const Superdim& dim, const RootIndex& r) {
    check_root(dim, r);
    return (parity_index(dim, r.i) + parity_index(dim, r.j)) % 2;
}

// Invariant bilinear form on roots:
// <Xi_a, Xi_b> = d_a delta_ab extended bilinearly.
inline int bilinear(const Superdim& dim, const RootIndex& a, const RootIndex& b) {
    check_root(dim, a);
    check_root(dim, b);
    int v = 0;
    if (a.i == b.i) v += d_sign(dim, a.i);
    if (a.i == b.j) v -= d_sign(dim, a.i);
    if (a.j == b.i) v -= d_sign(dim, a.j);
    if (a.j == b.j) v += d_sign(dim, a.j);
    return v;
}

// Integer coordinate vector over the Xi basis.
struct Weight {
    std::vector<int> v;

    explicit Weight(int len) : v(static_cast<std::size_t>(len), 0) {}
    explicit Weight(std::vector<int> coords) : v(std::move(coords)) {}

    int size() const { return static_cast<int>(v.size()); }
    int& operator[](int k) { return v[static_cast<std::size_t>(k)]; }
    int operator[](int k) const { return v[static_cast<std::size_t>(k)]; }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.v <=> b.v; }

    Weight& operator+=(const Weight& o) {
        if (v.size() != o.v.size()) throw DimensionMismatch("weight length mismatch");
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += o.v[k];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        if (v.size() != o.v.size()) throw DimensionMismatch("weight length mismatch");
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= o.v[k];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (auto& x : r.v) x = -x;
        return r;
    }
    bool is_zero() const {
        for (int x : v)
            if (x != 0) return false;
        return true;
    }
};

// Weight of the root vector at position r: +1 at i, -1 at j.
inline Weight weight_of(const Superdim& dim, const RootIndex& r) {
    check_root(dim, r);
    Weight w(dim.total());
    w[r.i - 1] += 1;
    w[r.j - 1] -= 1;
    return w;
}

// Bilinear form on arbitrary weights: sum_k d_k a_k b_k.
inline int weight_bilinear(const Superdim& dim, const Weight& a, const Weight& b) {
    if (a.size() != dim.total() || b.size() != dim.total())
        throw DimensionMismatch("weight length differs from M+N");
    int v = 0;
    for (int k = 1; k <= dim.total(); ++k) v += d_sign(dim, k) * a[k - 1] * b[k - 1];
    return v;
}

// Parity of a weight: parity of the sum of its odd-sector coordinates.
inline int weight_parity(const Superdim& dim, const Weight& w) {
    if (w.size() != dim.total())
        throw DimensionMismatch("weight length differs from M+N");
    int s = 0;
    for (int k = dim.M + 1; k <= dim.total(); ++k) s += w[k - 1];
    return ((s % 2) + 2) % 2;
}

// Sign of a weight inside the root lattice. Positive roots are the
// (i, j)-positions with i < j, so a lattice vector is a nonnegative sum of
// positive roots exactly when all its prefix sums are >= 0.
enum class WeightSign { Zero, Positive, Negative, Mixed };

inline WeightSign weight_sign(const Superdim& dim, const Weight& w) {
    if (w.size() != dim.total())
        throw DimensionMismatch("weight length differs from M+N");
    if (w.is_zero()) return WeightSign::Zero;
    long total = std::accumulate(w.v.begin(), w.v.end(), 0L);
    if (total != 0) return WeightSign::Mixed;  // outside the root lattice
    bool all_nonneg = true, all_nonpos = true;
    long prefix = 0;
    for (int x : w.v) {
        prefix += x;
        if (prefix < 0) all_nonneg = false;
        if (prefix > 0) all_nonpos = false;
    }
    if (all_nonneg) return WeightSign::Positive;
    if (all_nonpos) return WeightSign::Negative;
    return WeightSign::Mixed;
}

// Pairing of the root at r with a Cartan exponent vector sum_k c_k K_k,
// i.e. the exponent by which q^X scales the root vector: c_i - c_j.
inline int cartan_pairing(const Superdim& dim, const RootIndex& r,
                          const std::vector<int>& c) {
    check_root(dim, r);
    if (static_cast<int>(c.size()) != dim.total())
        throw DimensionMismatch("Cartan vector length differs from M+N");
    return c[static_cast<std::size_t>(r.i - 1)] - c[static_cast<std::size_t>(r.j - 1)];
}

// Relative position of a strictly lex-ordered pair of roots (i,j) < (m,n).
//   I   same row:     i = m < j < n
//   II  nested:       i < m < n < j
//   III same column:  i < m < j = n
//   IV  interleaved:  i < m < j < n
//   V   glued:        i < j = m < n
//   VI  disjoint:     i < j < m < n
enum class Branch { I, II, III, IV, V, VI };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::I: return "I";
        case Branch::II: return "II";
        case Branch::III: return "III";
        case Branch::IV: return "IV";
        case Branch::V: return "V";
        case Branch::VI: return "VI";
    }
    return "?";
}

inline Branch classify(const Superdim& dim, const RootIndex& a, const RootIndex& b) {
    check_root(dim, a);
    check_root(dim, b);
    if (!(a < b))
        throw NotStrictlyOrdered("classify requires a strictly lex-ordered pair");
    if (a.i == b.i) return Branch::I;  // lex order forces a.j < b.j
    if (a.j == b.j) return Branch::III;
    if (a.j == b.i) return Branch::V;
    if (a.j < b.i) return Branch::VI;
    // now a.i < b.i < a.j and a.j != b.j
    return b.j < a.j ? Branch::II : Branch::IV;
}

}  // namespace uqgl
