#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uqgl/errors.hpp"
#include "uqgl/qrat.hpp"
#include "uqgl/rational.hpp"
#include "uqgl/rootdata.hpp"

namespace uqgl {

// ---------------------------------------------------------------------------
// Coefficient rings. The straightening engine is generic over the ring so the
// same rules run with symbolic coefficients in Q(q) and with q specialized to
// a rational point (an independent cancellation path used for verification).
// ---------------------------------------------------------------------------

struct SymbolicRing {
    using Value = QRat;
    Value zero() const { return QRat(); }
    Value one() const { return QRat(1); }
    Value from_rational(const Rational& r) const { return QRat(r); }
    Value q_power(int k) const { return QRat::q_power(k); }
    Value kappa(int d) const { return uqgl::kappa(d); }
    Value inv_kappa(int d) const { return one() / uqgl::kappa(d); }
};

struct NumericRing {
    using Value = Rational;
    Rational q0;

    explicit NumericRing(Rational q) : q0(std::move(q)) {
        if (q0 == 0) throw DivisionByZero("numeric coefficient ring needs q0 != 0");
    }
    Value zero() const { return Rational(0); }
    Value one() const { return Rational(1); }
    Value from_rational(const Rational& r) const { return r; }
    Value q_power(int k) const { return rational_pow(q0, k); }
    Value kappa(int d) const { return q_power(d) - q_power(-d); }
    Value inv_kappa(int d) const {
        Value k = kappa(d);
        if (k == 0)
            throw PoleAtPoint("q0^d - q0^-d vanishes at the evaluation point");
        return one() / k;
    }
};

inline bool coeff_is_zero(const QRat& v) { return v.is_zero(); }
inline bool coeff_is_zero(const Rational& v) { return v == 0; }

// ---------------------------------------------------------------------------
// Letters, words, monomials, elements.
// ---------------------------------------------------------------------------

using CartanVector = std::vector<int>;

enum class GenKind { F, Cartan, E };

// A single letter: a raising/lowering root vector at a root position, or a
// group-like Cartan exponential q^{sum_k c_k K_k}.
struct Generator {
    GenKind kind;
    RootIndex root{0, 0};  // E/F only
    CartanVector cartan;   // Cartan only

    static Generator E(RootIndex r) { return Generator{GenKind::E, r, {}}; }
    static Generator F(RootIndex r) { return Generator{GenKind::F, r, {}}; }
    static Generator K(CartanVector c) {
        return Generator{GenKind::Cartan, RootIndex{0, 0}, std::move(c)};
    }
    friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

namespace detail {

// Block order used inside PBW monomials: position-wise on (root, exponent)
// with an absent entry comparing greater, so a word extending another by more
// letters sorts first.
inline std::strong_ordering block_compare(
    const std::vector<std::pair<RootIndex, int>>& a,
    const std::vector<std::pair<RootIndex, int>>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (auto c = a[k] <=> b[k]; c != 0) return c;
    }
    if (a.size() == b.size()) return std::strong_ordering::equal;
    return a.size() > b.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
}

}  // namespace detail

// Ordered monomial: F letters with nondecreasing roots, one Cartan
// exponential, then E letters with nondecreasing roots. Equal roots are
// merged into exponents; an odd root never carries exponent > 1.
struct PBWMonomial {
    std::vector<std::pair<RootIndex, int>> f_block;
    CartanVector cartan;  // length M+N, zeros allowed
    std::vector<std::pair<RootIndex, int>> e_block;

    bool is_identity() const {
        if (!f_block.empty() || !e_block.empty()) return false;
        for (int c : cartan)
            if (c != 0) return false;
        return true;
    }
    bool is_cartan_only() const { return f_block.empty() && e_block.empty(); }

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
        if (auto c = detail::block_compare(a.f_block, b.f_block); c != 0)
            return c == std::strong_ordering::less;
        if (a.cartan != b.cartan) return a.cartan < b.cartan;
        return detail::block_compare(a.e_block, b.e_block) ==
               std::strong_ordering::less;
    }
};

// Finite linear combination of ordered monomials. Invariant: no stored
// coefficient is zero; all monomials agree with dim.
template <class V>
struct Element {
    Superdim dim;
    std::map<PBWMonomial, V> terms;

    explicit Element(Superdim d) : dim(d) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const PBWMonomial& m, const V& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        if (!(dim == o.dim)) throw DimensionMismatch("element dims differ in +");
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        if (!(dim == o.dim)) throw DimensionMismatch("element dims differ in -");
        for (const auto& [m, c] : o.terms) add_term(m, V(0) - c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) {
        Element r(a.dim);
        for (const auto& [m, c] : a.terms) r.terms.emplace(m, V(0) - c);
        return r;
    }
    Element scaled(const V& s) const {
        Element r(dim);
        if (coeff_is_zero(s)) return r;
        for (const auto& [m, c] : terms) {
            V sc = c * s;
            if (!coeff_is_zero(sc)) r.terms.emplace(m, sc);
        }
        return r;
    }
    friend bool operator==(const Element& a, const Element& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }
};

// ---------------------------------------------------------------------------
// The straightening engine.
// ---------------------------------------------------------------------------

template <class Ring>
class Algebra {
  public:
    using V = typename Ring::Value;
    using Elem = Element<V>;

    struct Term {
        V coeff;
        Word word;
    };

    explicit Algebra(Superdim dim, Ring ring = Ring())
        : dim_(dim), ring_(std::move(ring)) {}

    const Superdim& dim() const { return dim_; }
    const Ring& ring() const { return ring_; }

    // --- element factories -------------------------------------------------

    Elem zero() const { return Elem(dim_); }
    Elem scalar(const V& c) const {
        Elem e(dim_);
        e.add_term(identity_monomial(), c);
        return e;
    }
    Elem one() const { return scalar(ring_.one()); }
    Elem generator(const Generator& g) const {
        check_letter(g);
        Elem e(dim_);
        e.add_term(letter_monomial(g), ring_.one());
        return e;
    }

    PBWMonomial identity_monomial() const {
        PBWMonomial m;
        m.cartan.assign(static_cast<std::size_t>(dim_.total()), 0);
        return m;
    }

    // --- weights -----------------------------------------------------------

    Weight monomial_weight(const PBWMonomial& m) const {
        Weight w(dim_.total());
        for (const auto& [r, e] : m.f_block) {
            w[r.i - 1] -= e;
            w[r.j - 1] += e;
        }
        for (const auto& [r, e] : m.e_block) {
            w[r.i - 1] += e;
            w[r.j - 1] -= e;
        }
        return w;
    }
    int monomial_parity(const PBWMonomial& m) const {
        return weight_parity(dim_, monomial_weight(m));
    }

    // True when every monomial shares one weight; that weight goes to *out.
    bool is_homogeneous(const Elem& e, Weight* out = nullptr) const {
        if (e.terms.empty()) return true;  // weight undefined
        Weight w = monomial_weight(e.terms.begin()->first);
        for (const auto& [m, c] : e.terms)
            if (!(monomial_weight(m) == w)) return false;
        if (out) *out = w;
        return true;
    }

    std::vector<std::pair<Weight, Elem>> weight_decomposition(const Elem& e) const {
        std::map<Weight, Elem> parts;
        for (const auto& [m, c] : e.terms) {
            auto [it, fresh] = parts.try_emplace(monomial_weight(m), dim_);
            it->second.add_term(m, c);
        }
        return {parts.begin(), parts.end()};
    }

    // --- composite root vectors in terms of simple letters ------------------
    // E at (i, j+1) = E(i,j) E(j,j+1) - q_j E(j,j+1) E(i,j),
    // F at (i, j+1) = F(j,j+1) F(i,j) - q_j^-1 F(i,j) F(j,j+1).

    std::vector<Term> expand_to_simple(GenKind kind, RootIndex r) const {
        check_root(dim_, r);
        if (kind == GenKind::Cartan)
            throw IndexOutOfRange("expand_to_simple takes a raising or lowering kind");
        if (is_simple_root(r)) return {Term{ring_.one(), {make_letter(kind, r)}}};
        RootIndex inner{r.i, r.j - 1};
        RootIndex last{r.j - 1, r.j};
        std::vector<Term> sub = expand_to_simple(kind, inner);
        int dj = d_sign(dim_, r.j - 1);
        std::vector<Term> out;
        out.reserve(sub.size() * 2);
        Generator tail = make_letter(kind, last);
        for (const auto& t : sub) {
            if (kind == GenKind::E) {
                Word w1 = t.word;
                w1.push_back(tail);
                out.push_back(Term{t.coeff, std::move(w1)});
                Word w2;
                w2.reserve(t.word.size() + 1);
                w2.push_back(tail);
                w2.insert(w2.end(), t.word.begin(), t.word.end());
                out.push_back(Term{V(0) - t.coeff * ring_.q_power(dj), std::move(w2)});
            } else {
                Word w1;
                w1.reserve(t.word.size() + 1);
                w1.push_back(tail);
                w1.insert(w1.end(), t.word.begin(), t.word.end());
                out.push_back(Term{t.coeff, std::move(w1)});
                Word w2 = t.word;
                w2.push_back(tail);
                out.push_back(Term{V(0) - t.coeff * ring_.q_power(-dj), std::move(w2)});
            }
        }
        return out;
    }

    // --- normalization -----------------------------------------------------

    Elem normalize(const Word& w) const { return normalize(ring_.one(), w); }

    Elem normalize(const V& coeff, const Word& w) const {
        std::vector<Term> pending;
        pending.push_back(Term{coeff, w});
        return normalize_terms(std::move(pending));
    }

    Elem normalize_terms(std::vector<Term> pending) const {
        for (const auto& t : pending)
            for (const auto& g : t.word) check_letter(g);
        Elem out(dim_);
        std::size_t steps = 0;
        while (!pending.empty()) {
            Term t = std::move(pending.back());
            pending.pop_back();
            if (coeff_is_zero(t.coeff)) continue;
            std::size_t k = 0;
            bool found = false;
            for (; k + 1 < t.word.size(); ++k) {
                if (violates(t.word[k], t.word[k + 1])) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                out.add_term(assemble(t.word), t.coeff);
                continue;
            }
            if (++steps > kMaxSteps)
                throw InternalError("straightening exceeded the iteration bound");
            for (auto& [factor, repl] : rewrite(t.word[k], t.word[k + 1])) {
                Term nt;
                nt.coeff = t.coeff * factor;
                if (coeff_is_zero(nt.coeff)) continue;
                nt.word.reserve(t.word.size() + repl.size());
                nt.word.insert(nt.word.end(), t.word.begin(),
                               t.word.begin() + static_cast<std::ptrdiff_t>(k));
                nt.word.insert(nt.word.end(), repl.begin(), repl.end());
                nt.word.insert(nt.word.end(),
                               t.word.begin() + static_cast<std::ptrdiff_t>(k) + 2,
                               t.word.end());
                pending.push_back(std::move(nt));
            }
        }
        return out;
    }

    // Rewrites the two-letter word a^pa * b^pb; AlreadyOrdered when it is
    // already a PBW prefix (no descending pair, no repeated odd root).
    Elem straighten_pair(const Generator& a, int pa, const Generator& b, int pb) const {
        check_letter(a);
        check_letter(b);
        if (pa < 1 || pb < 1)
            throw IndexOutOfRange("straighten_pair powers must be >= 1");
        bool odd_square =
            (a.kind != GenKind::Cartan && pa >= 2 && root_parity(dim_, a.root) == 1) ||
            (b.kind != GenKind::Cartan && pb >= 2 && root_parity(dim_, b.root) == 1);
        if (!violates(a, b) && !odd_square)
            throw AlreadyOrdered("pair is already in PBW order");
        Word w;
        append_power(w, a, pa);
        append_power(w, b, pb);
        return normalize(w);
    }

    // --- products ------------------------------------------------------------

    Elem multiply(const Elem& a, const Elem& b) const {
        require_dim(a);
        require_dim(b);
        std::vector<Term> pending;
        pending.reserve(a.terms.size() * b.terms.size());
        for (const auto& [ma, ca] : a.terms) {
            Word wa = monomial_word(ma);
            for (const auto& [mb, cb] : b.terms) {
                Term t;
                t.coeff = ca * cb;
                if (coeff_is_zero(t.coeff)) continue;
                t.word = wa;
                Word wb = monomial_word(mb);
                t.word.insert(t.word.end(), wb.begin(), wb.end());
                pending.push_back(std::move(t));
            }
        }
        return normalize_terms(std::move(pending));
    }

    // Signed factor t with bracket(X, Y) = XY - t YX for homogeneous degrees
    // wa, wb: t = (-1)^{[wa][wb]} q^{-<wa,wb>} when both degrees are positive,
    // (-1)^{[wa][wb]} q^{+<wa,wb>} when both are negative, and plain
    // (-1)^{[wa][wb]} for one of each.
    V bracket_twist(const Weight& wa, const Weight& wb) const {
        WeightSign sa = weight_sign(dim_, wa);
        WeightSign sb = weight_sign(dim_, wb);
        if (sa == WeightSign::Zero || sa == WeightSign::Mixed ||
            sb == WeightSign::Zero || sb == WeightSign::Mixed)
            throw IndefiniteDegreeSign("operand degree has no definite sign");
        V factor = ring_.one();
        if (sa == WeightSign::Positive && sb == WeightSign::Positive)
            factor = ring_.q_power(-weight_bilinear(dim_, wa, wb));
        else if (sa == WeightSign::Negative && sb == WeightSign::Negative)
            factor = ring_.q_power(weight_bilinear(dim_, wa, wb));
        if ((weight_parity(dim_, wa) & weight_parity(dim_, wb)) != 0)
            factor = V(0) - factor;
        return factor;
    }

    // Degree-graded bracket: XY - (-1)^{[X][Y]} q^{-+<deg X, deg Y>} YX, with
    // the q factor present only when both degrees have the same sign.
    Elem supercommutator(const Elem& a, const Elem& b) const {
        require_dim(a);
        require_dim(b);
        if (a.is_zero() || b.is_zero()) return zero();
        Weight wa(dim_.total()), wb(dim_.total());
        if (!is_homogeneous(a, &wa))
            throw NotHomogeneous("left operand mixes weights");
        if (!is_homogeneous(b, &wb))
            throw NotHomogeneous("right operand mixes weights");
        return multiply(a, b) - multiply(b, a).scaled(bracket_twist(wa, wb));
    }

    // --- words from elements -------------------------------------------------

    Word monomial_word(const PBWMonomial& m) const {
        Word w;
        for (const auto& [r, e] : m.f_block) append_power(w, Generator::F(r), e);
        bool cartan_nonzero = false;
        for (int c : m.cartan) cartan_nonzero |= (c != 0);
        if (cartan_nonzero) w.push_back(Generator::K(m.cartan));
        for (const auto& [r, e] : m.e_block) append_power(w, Generator::E(r), e);
        return w;
    }

    std::vector<Term> to_words(const Elem& e) const {
        require_dim(e);
        std::vector<Term> out;
        out.reserve(e.terms.size());
        for (const auto& [m, c] : e.terms) out.push_back(Term{c, monomial_word(m)});
        return out;
    }

  private:
    static constexpr std::size_t kMaxSteps = 10'000'000;

    void require_dim(const Elem& e) const {
        if (!(e.dim == dim_)) throw DimensionMismatch("element built for another dim");
    }

    static Generator make_letter(GenKind kind, RootIndex r) {
        return kind == GenKind::E ? Generator::E(r) : Generator::F(r);
    }

    static void append_power(Word& w, const Generator& g, int p) {
        if (g.kind == GenKind::Cartan) {
            CartanVector c = g.cartan;
            for (auto& x : c) x *= p;
            w.push_back(Generator::K(std::move(c)));
            return;
        }
        for (int k = 0; k < p; ++k) w.push_back(g);
    }

    void check_letter(const Generator& g) const {
        if (g.kind == GenKind::Cartan) {
            if (static_cast<int>(g.cartan.size()) != dim_.total())
                throw DimensionMismatch("Cartan letter length differs from M+N");
        } else {
            check_root(dim_, g.root);
        }
    }

    PBWMonomial letter_monomial(const Generator& g) const {
        PBWMonomial m = identity_monomial();
        switch (g.kind) {
            case GenKind::F: m.f_block.push_back({g.root, 1}); break;
            case GenKind::E: m.e_block.push_back({g.root, 1}); break;
            case GenKind::Cartan: m.cartan = g.cartan; break;
        }
        return m;
    }

    // A pair of adjacent letters needs rewriting when it is out of PBW order:
    // E..F, E..Cartan, Cartan..F, two Cartans, a descending same-kind pair,
    // or a repeated odd root.
    bool violates(const Generator& x, const Generator& y) const {
        if (x.kind == GenKind::Cartan && y.kind == GenKind::Cartan) return true;
        if (x.kind == GenKind::E && y.kind == GenKind::Cartan) return true;
        if (x.kind == GenKind::Cartan && y.kind == GenKind::F) return true;
        if (x.kind == GenKind::E && y.kind == GenKind::F) return true;
        if (x.kind == y.kind && x.kind != GenKind::Cartan) {
            if (y.root < x.root) return true;
            if (x.root == y.root && root_parity(dim_, x.root) == 1) return true;
        }
        return false;
    }

    int sigma(const RootIndex& a, const RootIndex& b) const {
        return (root_parity(dim_, a) & root_parity(dim_, b)) != 0 ? -1 : 1;
    }

    V signed_value(int sign, V v) const { return sign < 0 ? V(0) - v : v; }

    CartanVector diag_cartan(int i, int j) const {
        // exponent vector of q^{d_i K_i - d_j K_j}
        CartanVector c(static_cast<std::size_t>(dim_.total()), 0);
        c[static_cast<std::size_t>(i - 1)] = d_sign(dim_, i);
        c[static_cast<std::size_t>(j - 1)] = -d_sign(dim_, j);
        return c;
    }

    static CartanVector negated(CartanVector c) {
        for (auto& x : c) x = -x;
        return c;
    }

    // Replacements for a violating pair. Every branch either shortens the
    // word, swaps the pair into ascending order (corrections start with a
    // strictly smaller letter), or moves a Cartan letter toward its slot, so
    // the rewriting terminates.
    std::vector<std::pair<V, Word>> rewrite(const Generator& x, const Generator& y) const {
        // Cartan merges and Cartan moves.
        if (x.kind == GenKind::Cartan && y.kind == GenKind::Cartan) {
            CartanVector sum = x.cartan;
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += y.cartan[k];
            bool zero = std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; });
            if (zero) return {{ring_.one(), Word{}}};
            return {{ring_.one(), Word{Generator::K(std::move(sum))}}};
        }
        if (x.kind == GenKind::E && y.kind == GenKind::Cartan)
            return {{ring_.q_power(-cartan_pairing(dim_, x.root, y.cartan)),
                     Word{y, x}}};
        if (x.kind == GenKind::Cartan && y.kind == GenKind::F)
            return {{ring_.q_power(-cartan_pairing(dim_, y.root, x.cartan)),
                     Word{y, x}}};

        if (x.kind == y.kind) return rewrite_same_kind(x, y);
        return rewrite_ef(x, y);
    }

    // Descending same-kind pair: left root strictly exceeds right root in lex
    // order, or the two roots coincide at an odd position (square is zero).
    std::vector<std::pair<V, Word>> rewrite_same_kind(const Generator& x,
                                                      const Generator& y) const {
        const bool raising = x.kind == GenKind::E;
        if (x.root == y.root) return {};  // odd square
        RootIndex lo = y.root, hi = x.root;
        Branch br = classify(dim_, lo, hi);
        int sg = sigma(lo, hi);
        auto L = [&](RootIndex r) { return raising ? Generator::E(r) : Generator::F(r); };
        const int i = lo.i, j = lo.j;
        const int m = hi.i, n = hi.j;
        switch (br) {
            case Branch::VI:
                return {{ring_.one(), Word{y, x}}};
            case Branch::II:
                return {{signed_value(sg, ring_.one()), Word{y, x}}};
            case Branch::V: {
                // glued pair: swapping costs q_j^-1 and splits off the
                // composite root vector at (i, n)
                std::vector<std::pair<V, Word>> out;
                int dj = d_sign(dim_, j);
                out.push_back({ring_.q_power(-dj), Word{y, x}});
                if (raising)
                    out.push_back({V(0) - ring_.q_power(-dj), Word{L(RootIndex{i, n})}});
                else
                    out.push_back({ring_.one(), Word{L(RootIndex{i, n})}});
                return out;
            }
            case Branch::I:
                return {{signed_value(sg, ring_.q_power(d_sign(dim_, i))), Word{y, x}}};
            case Branch::III:
                return {{signed_value(sg, ring_.q_power(d_sign(dim_, j))), Word{y, x}}};
            case Branch::IV: {
                std::vector<std::pair<V, Word>> out;
                out.push_back({signed_value(sg, ring_.one()), Word{y, x}});
                V corr = ring_.kappa(d_sign(dim_, m));
                if (raising)
                    out.push_back({signed_value(sg, corr),
                                   Word{L(RootIndex{m, j}), L(RootIndex{i, n})}});
                else
                    out.push_back({corr, Word{L(RootIndex{i, n}), L(RootIndex{m, j})}});
                return out;
            }
        }
        throw InternalError("unhandled same-kind branch");
    }

    // E letter directly left of an F letter.
    std::vector<std::pair<V, Word>> rewrite_ef(const Generator& x, const Generator& y) const {
        const RootIndex a = x.root;  // raising root
        const RootIndex b = y.root;  // lowering root
        int sg = sigma(a, b);
        if (a == b) {
            // diagonal pair: bracket is a difference of Cartan exponentials
            // over q_i - q_i^-1
            CartanVector c = diag_cartan(a.i, a.j);
            V inv = ring_.inv_kappa(d_sign(dim_, a.i));
            return {{signed_value(sg, ring_.one()), Word{y, x}},
                    {inv, Word{Generator::K(c)}},
                    {V(0) - inv, Word{Generator::K(negated(c))}}};
        }
        RootIndex lo = std::min(a, b), hi = std::max(a, b);
        Branch br = classify(dim_, lo, hi);
        switch (br) {
            case Branch::V:
            case Branch::VI:
                return {{ring_.one(), Word{y, x}}};
            case Branch::II:
                return {{signed_value(sg, ring_.one()), Word{y, x}}};
            case Branch::I: {
                const int i = lo.i, j = lo.j, n = hi.j;
                CartanVector c = diag_cartan(i, j);
                if (a == lo) {
                    // raising at (i,j), lowering at (i,n): residue lowers (j,n)
                    return {{signed_value(sg, ring_.one()), Word{y, x}},
                            {signed_value(-sg, ring_.one()),
                             Word{Generator::K(negated(c)), Generator::F(RootIndex{j, n})}}};
                }
                // raising at (i,n), lowering at (i,j): residue raises (j,n)
                return {{signed_value(sg, ring_.one()), Word{y, x}},
                        {signed_value(-sg, ring_.one()),
                         Word{Generator::E(RootIndex{j, n}), Generator::K(c)}}};
            }
            case Branch::III: {
                const int i = lo.i, j = lo.j, m = hi.i;
                CartanVector c = diag_cartan(m, j);
                if (a == lo) {
                    // raising at (i,j), lowering at (m,j): residue raises (i,m)
                    return {{signed_value(sg, ring_.one()), Word{y, x}},
                            {ring_.one(),
                             Word{Generator::K(negated(c)), Generator::E(RootIndex{i, m})}}};
                }
                // raising at (m,j), lowering at (i,j): residue lowers (i,m)
                return {{signed_value(sg, ring_.one()), Word{y, x}},
                        {ring_.one(),
                         Word{Generator::F(RootIndex{i, m}), Generator::K(c)}}};
            }
            case Branch::IV: {
                const int i = lo.i, j = lo.j, m = hi.i, n = hi.j;
                CartanVector c = diag_cartan(m, j);
                V kap = ring_.kappa(d_sign(dim_, j));
                if (a == lo) {
                    // raising at (i,j), lowering at (m,n)
                    return {{signed_value(sg, ring_.one()), Word{y, x}},
                            {kap,
                             Word{Generator::K(negated(c)), Generator::F(RootIndex{j, n}),
                                  Generator::E(RootIndex{i, m})}}};
                }
                // raising at (m,n), lowering at (i,j)
                return {{signed_value(sg, ring_.one()), Word{y, x}},
                        {V(0) - kap,
                         Word{Generator::F(RootIndex{i, m}), Generator::E(RootIndex{j, n}),
                              Generator::K(c)}}};
            }
            default:
                throw InternalError("unhandled raising-lowering branch");
        }
    }

    // Packs a word with no violating pair into a monomial.
    PBWMonomial assemble(const Word& w) const {
        PBWMonomial m = identity_monomial();
        int phase = 0;  // 0: F letters, 1: Cartan, 2: E letters
        auto push_block = [&](std::vector<std::pair<RootIndex, int>>& block,
                              const RootIndex& r) {
            if (!block.empty() && block.back().first == r) {
                if (root_parity(dim_, r) == 1)
                    throw InternalError("odd root escaped with exponent > 1");
                block.back().second += 1;
                return;
            }
            if (!block.empty() && !(block.back().first < r))
                throw InternalError("descending pair escaped straightening");
            block.push_back({r, 1});
        };
        for (const auto& g : w) {
            switch (g.kind) {
                case GenKind::F:
                    if (phase != 0) throw InternalError("lowering letter after Cartan block");
                    push_block(m.f_block, g.root);
                    break;
                case GenKind::Cartan: {
                    if (phase > 1) throw InternalError("second Cartan block in one word");
                    phase = 2;  // adjacent Cartans would have merged already
                    for (std::size_t k = 0; k < g.cartan.size(); ++k)
                        m.cartan[k] += g.cartan[k];
                    break;
                }
                case GenKind::E:
                    phase = 2;
                    push_block(m.e_block, g.root);
                    break;
            }
        }
        return m;
    }

    Superdim dim_;
    Ring ring_;
};

using SymbolicAlgebra = Algebra<SymbolicRing>;
using SymbolicElement = Element<QRat>;

}  // namespace uqgl
