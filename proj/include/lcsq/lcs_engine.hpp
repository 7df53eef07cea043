#pragma once

#include "lcsq/cyclic_words.hpp"
#include "lcsq/free_algebra.hpp"
#include "lcsq/subspace.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcsq {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultResourceCap = 100000;

inline void check_block_dim(uint64_t dim, uint64_t cap, const std::string& what) {
    if (dim > cap)
        throw ResourceLimitError(what + ": graded piece dimension " +
                                 std::to_string(dim) + " exceeds resource cap " +
                                 std::to_string(cap));
}

// Per-multidegree dimensions of one lower central series quotient
// B_m = L_m/L_{m+1}; summing over a total degree gives the Hilbert series
// coefficient.
struct BQuotientCharacter {
    uint32_t m = 0;
    uint32_t deg_max = 0;
    std::map<MultiDegree, uint64_t> coefficients; // zero entries omitted

    uint64_t at(const MultiDegree& delta) const {
        auto it = coefficients.find(delta);
        return it == coefficients.end() ? 0 : it->second;
    }

    // dims per total degree, index 0..deg_max
    std::vector<uint64_t> total_degree_series() const {
        std::vector<uint64_t> out(deg_max + 1, 0);
        for (const auto& [delta, dim] : coefficients) out[delta.total()] += dim;
        return out;
    }
};

// L_m(A_n) per multidegree, for m = 1..m_max+1 (one extra level so that
// every B_m with m <= m_max is a difference of stored ranks).
class LcsTable {
public:
    LcsTable(uint32_t n, uint32_t m_max, uint32_t deg_max)
        : n_(n), m_max_(m_max), deg_max_(deg_max) {}

    uint32_t n() const { return n_; }
    uint32_t m_max() const { return m_max_; }
    uint32_t deg_max() const { return deg_max_; }

    const GradedSubspace* space(uint32_t m, const MultiDegree& delta) const {
        auto it = spaces_.find({m, delta});
        return it == spaces_.end() ? nullptr : &it->second;
    }

    uint64_t dim(uint32_t m, const MultiDegree& delta) const {
        const GradedSubspace* s = space(m, delta);
        return s ? s->rank() : 0;
    }

    void put(uint32_t m, const MultiDegree& delta, GradedSubspace s) {
        spaces_.emplace(std::make_pair(m, delta), std::move(s));
    }

    const std::map<std::pair<uint32_t, MultiDegree>, GradedSubspace>& spaces() const {
        return spaces_;
    }

private:
    uint32_t n_, m_max_, deg_max_;
    std::map<std::pair<uint32_t, MultiDegree>, GradedSubspace> spaces_;
};

// L_1 = A, L_m = [A, L_{m-1}]. Each block L_m[delta] is spanned by brackets
// [w, u] of single words w (degree >= 1; constants bracket to zero) against
// the stored reduced basis of L_{m-1} in the complementary multidegree.
inline LcsTable build_lcs_table(uint32_t n, uint32_t m_max, uint32_t deg_max,
                                uint64_t resource_cap = kDefaultResourceCap) {
    if (n < 1 || m_max < 1 || deg_max < 1)
        throw std::invalid_argument("build_lcs_table: n, m_max, deg_max must be >= 1");
    LcsTable table(n, m_max, deg_max);

    std::map<MultiDegree, WordBlock> blocks;
    for (const auto& delta : multidegrees_up_to(n, deg_max)) {
        check_block_dim(multinomial(delta), resource_cap, "build_lcs_table");
        blocks.emplace(delta, make_word_block(delta));
    }

    // L_1: the full word space of every block
    for (const auto& [delta, block] : blocks) {
        GradedSubspace full(block.dimension());
        for (uint32_t i = 0; i < block.dimension(); ++i)
            full.insert(SparseVector::unit(i));
        table.put(1, delta, std::move(full));
    }

    for (uint32_t m = 2; m <= m_max + 1; ++m) {
        for (const auto& [delta, block] : blocks) {
            const uint32_t total = delta.total();
            if (total < m) continue; // brackets of m words have degree >= m
            GradedSubspace span(block.dimension());
            const uint64_t target = table.dim(m - 1, delta); // L_m <= L_{m-1}
            bool saturated = (target == 0);
            // low-degree words first: they generate most of the span
            for (uint32_t e = 1; e + (m - 1) <= total && !saturated; ++e) {
                for (const auto& [delta_w, wblock] : blocks) {
                    if (delta_w.total() != e || !delta.dominates(delta_w)) continue;
                    const MultiDegree delta_u = delta - delta_w;
                    const GradedSubspace* prev = table.space(m - 1, delta_u);
                    if (!prev || prev->rank() == 0) continue;
                    const WordBlock& ublock = blocks.at(delta_u);
                    for (const Word& w : wblock.words) {
                        auto fw = FreeAlgebraElement::from_word(n, w);
                        for (const auto& row : prev->rows()) {
                            auto u = element_from_row(row, ublock, n);
                            span.insert(coordinates(bracket(fw, u), block));
                            if (span.rank() == target) { saturated = true; break; }
                        }
                        if (saturated) break;
                    }
                    if (saturated) break;
                }
            }
            table.put(m, delta, std::move(span));
        }
    }
    return table;
}

inline BQuotientCharacter b_character(const LcsTable& table, uint32_t m) {
    if (m < 1 || m > table.m_max())
        throw std::invalid_argument("b_character: m out of table range");
    BQuotientCharacter chi;
    chi.m = m;
    chi.deg_max = table.deg_max();
    for (const auto& delta : multidegrees_up_to(table.n(), table.deg_max())) {
        uint64_t d = table.dim(m, delta) - table.dim(m + 1, delta);
        if (d > 0) chi.coefficients[delta] = d;
    }
    return chi;
}

// The central subspace: per multidegree, the image in A/[A,A] of
// A [[A,A],A] A. In the cyclic quotient a two-sided multiple folds into a
// one-sided one (pq = qp there), so the span of u * [[a,b],c] over words
// u (possibly empty), a, b, c suffices.
inline std::map<MultiDegree, GradedSubspace>
z_subspace(uint32_t n, uint32_t deg_max,
           uint64_t resource_cap = kDefaultResourceCap) {
    if (n < 1) throw std::invalid_argument("z_subspace: n must be >= 1");
    std::map<MultiDegree, GradedSubspace> out;
    std::map<MultiDegree, WordBlock> word_blocks;
    for (const auto& delta : multidegrees_up_to(n, deg_max))
        word_blocks.emplace(delta, make_word_block(delta));

    for (const auto& delta : multidegrees_up_to(n, deg_max)) {
        check_block_dim(multinomial(delta), resource_cap, "z_subspace");
        CyclicBlock cyc = make_cyclic_block(delta);
        GradedSubspace span(cyc.dimension());
        const uint32_t total = delta.total();
        if (total < 3) {
            out.emplace(delta, std::move(span));
            continue;
        }
        // split delta into u + a + b + c with a, b, c nonempty
        for (const auto& [du, ublock] : word_blocks) {
            if (!delta.dominates(du) || total - du.total() < 3) continue;
            MultiDegree rest_u = delta - du;
            for (const auto& [da, ablock] : word_blocks) {
                if (da.total() < 1 || !rest_u.dominates(da)) continue;
                MultiDegree rest_a = rest_u - da;
                if (rest_a.total() < 2) continue;
                for (const auto& [db, bblock] : word_blocks) {
                    if (db.total() < 1 || !rest_a.dominates(db)) continue;
                    MultiDegree dc = rest_a - db;
                    if (dc.total() < 1) continue;
                    const auto& cblock = word_blocks.at(dc);
                    for (const Word& wu : ublock.words)
                        for (const Word& wa : ablock.words)
                            for (const Word& wb : bblock.words) {
                                // [[a,b],c] is antisymmetric in (a,b)
                                if (std::pair(da, wa) >= std::pair(db, wb)) continue;
                                for (const Word& wc : cblock.words) {
                                    FreeAlgebraElement e(n);
                                    // u(abc - bac - cab + cba)
                                    e.add_term(wu * wa * wb * wc, Rational(1));
                                    e.add_term(wu * wb * wa * wc, Rational(-1));
                                    e.add_term(wu * wc * wa * wb, Rational(-1));
                                    e.add_term(wu * wc * wb * wa, Rational(1));
                                    span.insert(project_cyclic(e, cyc));
                                }
                            }
                }
            }
        }
        out.emplace(delta, std::move(span));
    }
    return out;
}

// dims of (A/[A,A])/Z per multidegree
inline BQuotientCharacter
bbar1_character(uint32_t n, uint32_t deg_max,
                uint64_t resource_cap = kDefaultResourceCap) {
    auto z = z_subspace(n, deg_max, resource_cap);
    BQuotientCharacter chi;
    chi.m = 1;
    chi.deg_max = deg_max;
    for (const auto& delta : multidegrees_up_to(n, deg_max)) {
        uint64_t classes = make_cyclic_block(delta).dimension();
        uint64_t d = classes - z.at(delta).rank();
        if (d > 0) chi.coefficients[delta] = d;
    }
    return chi;
}

} // namespace lcsq
