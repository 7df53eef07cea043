#pragma once

#include "lcsq/multidegree.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcsq {

// A word in the free associative algebra: a finite sequence of generator
// indices in [1, n]. The empty word is the unit.
struct Word {
    std::vector<uint8_t> letters;

    Word() = default;
    explicit Word(std::vector<uint8_t> l) : letters(std::move(l)) {}

    uint32_t degree() const { return static_cast<uint32_t>(letters.size()); }
    bool empty() const { return letters.empty(); }

    MultiDegree multidegree(uint32_t n) const {
        MultiDegree d = MultiDegree::zero(n);
        for (uint8_t l : letters) {
            if (l < 1 || l > n)
                throw std::invalid_argument("Word: letter outside [1, n]");
            ++d.counts[l - 1];
        }
        return d;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
        return r;
    }

    auto operator<=>(const Word&) const = default;

    std::string str() const {
        std::string s;
        for (uint8_t l : letters) {
            s += 'x';
            s += std::to_string(int(l));
        }
        return s.empty() ? "1" : s;
    }
};

inline uint64_t multinomial(const MultiDegree& delta) {
    // number of distinct arrangements of the letter multiset
    uint64_t r = 1, seen = 0;
    for (uint32_t c : delta.counts)
        for (uint32_t i = 1; i <= c; ++i) r = r * (++seen) / i;
    return r;
}

// Canonical column indexing of one multigraded piece of A_n: the words of a
// fixed multidegree, enumerated in lexicographic order of letter sequences.
struct WordBlock {
    MultiDegree delta;
    std::vector<Word> words;          // lex-sorted
    std::map<Word, uint32_t> index;

    uint32_t dimension() const { return static_cast<uint32_t>(words.size()); }

    uint32_t index_of(const Word& w) const {
        auto it = index.find(w);
        if (it == index.end())
            throw std::invalid_argument("WordBlock: word " + w.str() +
                                        " not in block");
        return it->second;
    }
};

inline WordBlock make_word_block(const MultiDegree& delta) {
    WordBlock block;
    block.delta = delta;
    std::vector<uint8_t> letters;
    for (uint32_t i = 0; i < delta.num_vars(); ++i)
        letters.insert(letters.end(), delta.counts[i], static_cast<uint8_t>(i + 1));
    // sorted ascending = lex-least arrangement; next_permutation walks the rest
    do {
        block.words.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    for (uint32_t i = 0; i < block.words.size(); ++i)
        block.index.emplace(block.words[i], i);
    return block;
}

} // namespace lcsq
