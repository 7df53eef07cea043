#pragma once

#include "lcsq/character.hpp"
#include "lcsq/partition.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace lcsq {

// h_k(t_1..t_n): character of Sym^k(C^n)
inline Character complete_homogeneous(uint32_t n, uint32_t k, uint32_t deg_max) {
    Character c(n, deg_max);
    if (k > deg_max) return c;
    for (const auto& d : multidegrees_of_total(n, k)) c.add(d, Rational(1));
    return c;
}

// Schur polynomial s_D(t_1..t_n) by semistandard tableau enumeration: rows
// weakly increase, columns strictly increase, entries in [1, n]. Each
// tableau contributes t^(content histogram).
inline Character schur(const Partition& D, uint32_t n, uint32_t deg_max) {
    if (D.rows() > n)
        throw std::invalid_argument("schur: diagram " + D.str() + " has more than " +
                                    std::to_string(n) + " rows");
    Character c(n, deg_max);
    if (D.size() > deg_max) return c;
    if (D.is_empty()) return Character::one(n, deg_max);

    std::vector<std::vector<uint32_t>> tableau(D.rows());
    for (uint32_t r = 0; r < D.rows(); ++r) tableau[r].assign(D.parts[r], 0);
    MultiDegree content = MultiDegree::zero(n);

    auto fill = [&](auto&& self, uint32_t r, uint32_t col) -> void {
        if (r == D.rows()) {
            c.add(content, Rational(1));
            return;
        }
        uint32_t nr = r, nc = col + 1;
        if (nc == D.parts[r]) {
            nr = r + 1;
            nc = 0;
        }
        uint32_t lo = 1;
        if (col > 0) lo = std::max(lo, tableau[r][col - 1]);       // row weakly increases
        if (r > 0) lo = std::max(lo, tableau[r - 1][col] + 1);     // column strictly increases
        for (uint32_t v = lo; v <= n; ++v) {
            tableau[r][col] = v;
            ++content.counts[v - 1];
            self(self, nr, nc);
            --content.counts[v - 1];
        }
    };
    fill(fill, 0, 0);
    return c;
}

// Independent route to the same polynomial: the Jacobi-Trudi determinant
// det(h_{D_i - i + j}). Used as a cross-check on the tableau enumeration.
inline Character jacobi_trudi(const Partition& D, uint32_t n, uint32_t deg_max) {
    if (D.rows() > n)
        throw std::invalid_argument("jacobi_trudi: too many rows");
    if (D.is_empty()) return Character::one(n, deg_max);
    const uint32_t r = D.rows();

    auto entry = [&](uint32_t i, uint32_t j) -> Character {
        long k = static_cast<long>(D.parts[i]) - static_cast<long>(i) +
                 static_cast<long>(j);
        if (k < 0) return Character(n, deg_max);
        return complete_homogeneous(n, static_cast<uint32_t>(k), deg_max);
    };

    // Leibniz expansion; r <= n stays tiny here
    Character det(n, deg_max);
    std::vector<uint32_t> perm(r);
    for (uint32_t i = 0; i < r; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Character prod = Character::one(n, deg_max);
        for (uint32_t i = 0; i < r; ++i) prod = prod * entry(i, perm[i]);
        det = sign > 0 ? det + prod : det - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Expands a homogeneous symmetric polynomial in the Schur basis by repeated
// subtraction at the lexicographically greatest monomial. For symmetric
// input that monomial has weakly decreasing exponents, and it is the leading
// monomial of the matching Schur polynomial, so the loop strictly descends
// and terminates.
inline std::map<Partition, Rational> schur_expand_slice(const Character& slice) {
    std::map<Partition, Rational> out;
    Character work = slice;
    while (!work.is_zero()) {
        const auto& [lead, coef] = *work.coefficients().rbegin();
        MultiDegree sorted = lead.sorted_descending();
        if (sorted != lead)
            throw std::invalid_argument(
                "schur_expand_slice: input is not symmetric (leading monomial "
                "has increasing exponents)");
        std::vector<uint32_t> parts = lead.counts;
        Partition lambda(std::move(parts));
        Rational c = coef;
        work = work - c * schur(lambda, slice.num_vars(), slice.deg_max());
        out[lambda] += c;
    }
    return out;
}

} // namespace lcsq
