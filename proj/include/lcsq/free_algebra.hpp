#pragma once

#include "lcsq/rational.hpp"
#include "lcsq/sparse_vector.hpp"
#include "lcsq/word.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace lcsq {

// Sparse rational linear combination of words of A_n. Homogeneity is not
// enforced: intermediate sums of mixed degree are legal, and graded
// extraction happens at the linear-algebra boundary via coordinates().
class FreeAlgebraElement {
public:
    explicit FreeAlgebraElement(uint32_t num_generators)
        : num_generators_(num_generators) {}

    static FreeAlgebraElement zero(uint32_t n) { return FreeAlgebraElement(n); }

    static FreeAlgebraElement unit(uint32_t n) {
        FreeAlgebraElement e(n);
        e.add_term(Word{}, Rational(1));
        return e;
    }

    static FreeAlgebraElement generator(uint32_t n, uint8_t i) {
        if (i < 1 || i > n)
            throw std::invalid_argument("generator index outside [1, n]");
        FreeAlgebraElement e(n);
        e.add_term(Word({i}), Rational(1));
        return e;
    }

    static FreeAlgebraElement from_word(uint32_t n, const Word& w) {
        FreeAlgebraElement e(n);
        e.add_term(w, Rational(1));
        return e;
    }

    uint32_t num_generators() const { return num_generators_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Rational& c) {
        if (lcsq::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (lcsq::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        uint32_t d = terms_.begin()->first.degree();
        for (const auto& [w, c] : terms_)
            if (w.degree() != d) return false;
        return true;
    }

    bool is_multihomogeneous() const {
        if (terms_.empty()) return true;
        MultiDegree d = terms_.begin()->first.multidegree(num_generators_);
        for (const auto& [w, c] : terms_)
            if (w.multidegree(num_generators_) != d) return false;
        return true;
    }

    friend FreeAlgebraElement operator+(const FreeAlgebraElement& a,
                                        const FreeAlgebraElement& b) {
        check_same(a, b);
        FreeAlgebraElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend FreeAlgebraElement operator-(const FreeAlgebraElement& a,
                                        const FreeAlgebraElement& b) {
        check_same(a, b);
        FreeAlgebraElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }

    friend FreeAlgebraElement operator*(const Rational& c,
                                        const FreeAlgebraElement& a) {
        FreeAlgebraElement r(a.num_generators_);
        if (lcsq::is_zero(c)) return r;
        for (const auto& [w, coef] : a.terms_) r.terms_.emplace(w, c * coef);
        return r;
    }

    friend bool operator==(const FreeAlgebraElement& a,
                           const FreeAlgebraElement& b) {
        return a.num_generators_ == b.num_generators_ && a.terms_ == b.terms_;
    }

    static void check_same(const FreeAlgebraElement& a,
                           const FreeAlgebraElement& b) {
        if (a.num_generators_ != b.num_generators_)
            throw std::invalid_argument("free algebra: generator-count mismatch");
    }

private:
    uint32_t num_generators_;
    std::map<Word, Rational> terms_;
};

inline FreeAlgebraElement multiply(const FreeAlgebraElement& a,
                                   const FreeAlgebraElement& b) {
    FreeAlgebraElement::check_same(a, b);
    FreeAlgebraElement r(a.num_generators());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa * wb, ca * cb);
    return r;
}

// ab - ba
inline FreeAlgebraElement bracket(const FreeAlgebraElement& a,
                                  const FreeAlgebraElement& b) {
    return multiply(a, b) - multiply(b, a);
}

// Coordinates of the multidegree-delta part of a in the canonical word basis
// of the given block.
inline SparseVector coordinates(const FreeAlgebraElement& a,
                                const WordBlock& block) {
    SparseVector v;
    std::vector<std::pair<uint32_t, Rational>> terms;
    for (const auto& [w, c] : a.terms()) {
        if (w.multidegree(a.num_generators()) == block.delta)
            terms.emplace_back(block.index_of(w), c);
    }
    return SparseVector::from_terms(std::move(terms));
}

inline SparseVector coordinates(const FreeAlgebraElement& a,
                                const MultiDegree& delta) {
    return coordinates(a, make_word_block(delta));
}

// Inverse of coordinates(): the element represented by a coordinate row.
inline FreeAlgebraElement element_from_row(const SparseVector& row,
                                           const WordBlock& block,
                                           uint32_t num_generators) {
    FreeAlgebraElement e(num_generators);
    for (const auto& [col, coef] : row.entries)
        e.add_term(block.words.at(col), coef);
    return e;
}

} // namespace lcsq
