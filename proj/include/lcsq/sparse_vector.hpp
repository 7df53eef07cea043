#pragma once

#include "lcsq/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace lcsq {

// Sparse coordinate vector over a graded piece. Entries are kept sorted by
// column with no explicit zeros, so zero-testing is emptiness.
template <class Scalar>
struct BasicSparseVector {
    std::vector<std::pair<uint32_t, Scalar>> entries;

    BasicSparseVector() = default;

    static BasicSparseVector unit(uint32_t col, Scalar coef = Scalar(1)) {
        BasicSparseVector v;
        v.entries.emplace_back(col, std::move(coef));
        return v;
    }

    // Accumulates possibly unsorted, possibly repeated (col, coef) terms.
    static BasicSparseVector
    from_terms(std::vector<std::pair<uint32_t, Scalar>> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        BasicSparseVector v;
        for (auto& [col, coef] : terms) {
            if (!v.entries.empty() && v.entries.back().first == col)
                v.entries.back().second += coef;
            else
                v.entries.emplace_back(col, std::move(coef));
        }
        v.prune();
        return v;
    }

    bool empty() const { return entries.empty(); }
    size_t nnz() const { return entries.size(); }

    uint32_t leading_col() const { return entries.front().first; }
    const Scalar& leading_coef() const { return entries.front().second; }

    uint32_t max_col() const { return entries.back().first; }

    const Scalar* coef(uint32_t col) const {
        auto it = std::lower_bound(
            entries.begin(), entries.end(), col,
            [](const auto& e, uint32_t c) { return e.first < c; });
        if (it == entries.end() || it->first != col) return nullptr;
        return &it->second;
    }

    void scale(const Scalar& c) {
        for (auto& e : entries) e.second = e.second * c;
    }

    // *this += c * other, merging sorted entry lists.
    void axpy(const Scalar& c, const BasicSparseVector& other) {
        std::vector<std::pair<uint32_t, Scalar>> merged;
        merged.reserve(entries.size() + other.entries.size());
        size_t i = 0, j = 0;
        while (i < entries.size() || j < other.entries.size()) {
            if (j == other.entries.size() ||
                (i < entries.size() && entries[i].first < other.entries[j].first)) {
                merged.push_back(std::move(entries[i++]));
            } else if (i == entries.size() ||
                       other.entries[j].first < entries[i].first) {
                merged.emplace_back(other.entries[j].first,
                                    c * other.entries[j].second);
                ++j;
            } else {
                Scalar s = entries[i].second + c * other.entries[j].second;
                if (!is_zero(s)) merged.emplace_back(entries[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        // drop zeros introduced by c == 0 scaling of the other side
        entries.clear();
        for (auto& e : merged)
            if (!is_zero(e.second)) entries.push_back(std::move(e));
    }

    void prune() {
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [](const auto& e) { return is_zero(e.second); }),
                      entries.end());
    }

    friend bool operator==(const BasicSparseVector& a, const BasicSparseVector& b) {
        return a.entries == b.entries;
    }
};

using SparseVector = BasicSparseVector<Rational>;

} // namespace lcsq
