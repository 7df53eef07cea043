#pragma once

#include "lcsq/free_algebra.hpp"
#include "lcsq/word.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace lcsq {

// B_1(A) = A/[A,A] has the cyclic words as a basis: pq = qp mod [A,A], so a
// word is identified with all of its rotations. The canonical representative
// is the lexicographically least rotation.
inline Word canonical_rotation(const Word& w) {
    if (w.letters.size() < 2) return w;
    Word best = w;
    Word rot = w;
    for (size_t i = 1; i < w.letters.size(); ++i) {
        std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        if (rot < best) best = rot;
    }
    return best;
}

// Coordinates on the multidegree-delta piece of A/[A,A].
struct CyclicBlock {
    MultiDegree delta;
    std::vector<Word> reps;          // canonical representatives, lex-sorted
    std::map<Word, uint32_t> index;  // representative -> column

    uint32_t dimension() const { return static_cast<uint32_t>(reps.size()); }
};

inline CyclicBlock make_cyclic_block(const MultiDegree& delta) {
    CyclicBlock block;
    block.delta = delta;
    WordBlock wb = make_word_block(delta);
    for (const Word& w : wb.words) {
        Word rep = canonical_rotation(w);
        if (block.index.emplace(rep, 0).second) block.reps.push_back(rep);
    }
    std::sort(block.reps.begin(), block.reps.end());
    for (uint32_t i = 0; i < block.reps.size(); ++i)
        block.index[block.reps[i]] = i;
    return block;
}

// Image of the multidegree-delta part of an element of A in A/[A,A].
inline SparseVector project_cyclic(const FreeAlgebraElement& a,
                                   const CyclicBlock& block) {
    std::vector<std::pair<uint32_t, Rational>> terms;
    for (const auto& [w, c] : a.terms()) {
        if (w.multidegree(a.num_generators()) != block.delta) continue;
        terms.emplace_back(block.index.at(canonical_rotation(w)), c);
    }
    return SparseVector::from_terms(std::move(terms));
}

} // namespace lcsq
