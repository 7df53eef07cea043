#pragma once

#include "lcsq/free_algebra.hpp"
#include "lcsq/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace lcsq {

// Witness that the left-normed bracket [[b_1,b_2],...,b_m] equals
// sum_sigma c_sigma [[b_k, b_sigma(1)], ..., b_sigma(m-1)], where sigma runs
// over orderings of [1,m] \ {k}. Checking the witness is a free-algebra
// expansion; see certificate_holds().
struct RearrangementCertificate {
    uint32_t m = 0;
    uint32_t k = 0;
    std::vector<std::pair<std::vector<uint32_t>, Rational>> terms;
};

namespace detail {

// An atom in an intermediate bracket sequence: either a plain generator
// index (size 1) or a right-nested chain [c_1,[c_2,...[c_r,t]...]] produced
// by the Jacobi step, always ending in the original target generator.
using Atom = std::vector<uint32_t>;
using AtomSeq = std::vector<Atom>;

// Expresses the left-normed bracket of seq as a combination of left-normed
// brackets whose leading atom is seq[pos]. Every atom except seq[pos] is a
// plain generator.
inline std::map<AtomSeq, long> rearrange_rec(const AtomSeq& seq, size_t pos) {
    std::map<AtomSeq, long> out;
    if (pos == 0) {
        out[seq] = 1;
        return out;
    }
    if (pos == 1) {
        // [[a,b], rest] = -[[b,a], rest]
        AtomSeq s = seq;
        std::swap(s[0], s[1]);
        out[s] = -1;
        return out;
    }
    // Jacobi at the two innermost positions involving the target b = seq[pos],
    // with P the left-normed bracket of seq[0..pos-2] and a = seq[pos-1]:
    //   [[P, a], b] = [[P, b], a] + [P, [a, b]]
    AtomSeq t1 = seq;
    std::swap(t1[pos - 1], t1[pos]);
    for (auto& [s, c] : rearrange_rec(t1, pos - 1)) out[s] += c;

    AtomSeq t2(seq.begin(), seq.begin() + static_cast<long>(pos) - 1);
    Atom chain;
    chain.push_back(seq[pos - 1].front()); // a is a plain generator here
    chain.insert(chain.end(), seq[pos].begin(), seq[pos].end());
    t2.push_back(std::move(chain));
    t2.insert(t2.end(), seq.begin() + static_cast<long>(pos) + 1, seq.end());
    for (auto& [s, c] : rearrange_rec(t2, pos - 1)) out[s] += c;

    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

} // namespace detail

inline RearrangementCertificate rearrangement(uint32_t m, uint32_t k) {
    if (m < 2 || k < 1 || k > m)
        throw std::invalid_argument("rearrangement: need m >= 2 and 1 <= k <= m");
    detail::AtomSeq seq;
    for (uint32_t i = 1; i <= m; ++i) seq.push_back({i});
    auto combo = detail::rearrange_rec(seq, k - 1);

    // Flatten leading chains: [c_1,[...,[c_r,t]...]] as leading atom unwinds
    // one antisymmetry flip per link,
    //   LB([c_1, rest], S) = -LB(rest, c_1, S),
    // so the final order is (t, c_r, ..., c_1, S) with sign (-1)^r.
    std::map<std::vector<uint32_t>, long> merged;
    for (const auto& [s, c] : combo) {
        const detail::Atom& chain = s.front();
        std::vector<uint32_t> sigma(chain.rbegin() + 1, chain.rend());
        for (size_t i = 1; i < s.size(); ++i) sigma.push_back(s[i].front());
        long sign = (chain.size() % 2 == 0) ? -1 : 1;
        merged[sigma] += c * sign;
    }

    RearrangementCertificate cert;
    cert.m = m;
    cert.k = k;
    for (const auto& [sigma, c] : merged)
        if (c != 0) cert.terms.emplace_back(sigma, Rational(c));
    return cert;
}

// [[b_{i_1}, b_{i_2}], ..., b_{i_r}] expanded in the free algebra on n
// generators (indices are 1-based generator labels).
inline FreeAlgebraElement left_normed_bracket(uint32_t n,
                                              const std::vector<uint32_t>& idx) {
    if (idx.empty()) throw std::invalid_argument("left_normed_bracket: empty");
    auto e = FreeAlgebraElement::generator(n, static_cast<uint8_t>(idx[0]));
    for (size_t i = 1; i < idx.size(); ++i)
        e = bracket(e, FreeAlgebraElement::generator(n, static_cast<uint8_t>(idx[i])));
    return e;
}

// Exact identity check by full expansion over A_m with b_i = x_i.
inline bool certificate_holds(const RearrangementCertificate& cert) {
    const uint32_t n = cert.m;
    std::vector<uint32_t> id_order;
    for (uint32_t i = 1; i <= cert.m; ++i) id_order.push_back(i);
    FreeAlgebraElement lhs = left_normed_bracket(n, id_order);

    FreeAlgebraElement rhs(n);
    for (const auto& [sigma, c] : cert.terms) {
        std::vector<uint32_t> order;
        order.push_back(cert.k);
        order.insert(order.end(), sigma.begin(), sigma.end());
        rhs = rhs + c * left_normed_bracket(n, order);
    }
    return (rhs - lhs).is_zero();
}

} // namespace lcsq
