#pragma once

#include "lcsq/character.hpp"
#include "lcsq/partition.hpp"
#include "lcsq/schur.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace lcsq {

// char of Omega^k(C^n): k-forms with polynomial coefficients; dx_i carries
// the same torus weight t_i as x_i
inline Character char_omega_k(uint32_t n, uint32_t k, uint32_t deg_max) {
    return Character::elementary(n, k, deg_max).times_full_polynomial_ring();
}

// char of closed polynomial k-forms. The polynomial de Rham complex is exact
// in positive rank, so closed^k = d(Omega^{k-1}) and
//   char closed^0 = 1,  char closed^k = char Omega^{k-1} - char closed^{k-1}.
// Validated against a direct kernel-of-d rank computation in the forms tests.
inline Character char_closed_k(uint32_t n, uint32_t k, uint32_t deg_max) {
    Character closed = Character::one(n, deg_max);
    for (uint32_t j = 1; j <= k; ++j)
        closed = char_omega_k(n, j - 1, deg_max) - closed;
    return closed;
}

// char of exact k-forms
inline Character char_exact_k(uint32_t n, uint32_t k, uint32_t deg_max) {
    if (k == 0) return Character(n, deg_max);
    return char_omega_k(n, k - 1, deg_max) - char_closed_k(n, k - 1, deg_max);
}

// char of the tensor field module F_D: the whole space of tensor fields
// when D has more than one column, closed polynomial k-forms when D is one
// column of k squares.
inline Character char_tensor_field(const Partition& D, uint32_t n,
                                   uint32_t deg_max) {
    if (D.is_empty())
        throw std::invalid_argument("char_tensor_field: zero diagram");
    if (D.rows() > n)
        throw std::invalid_argument("char_tensor_field: diagram " + D.str() +
                                    " has more than " + std::to_string(n) + " rows");
    if (D.is_one_column()) return char_closed_k(n, D.rows(), deg_max);
    return schur(D, n, deg_max).times_full_polynomial_ring();
}

struct DecompositionError : std::runtime_error {
    uint32_t degree;
    Partition shape;
    Rational coefficient;
    DecompositionError(uint32_t deg, Partition d, Rational c)
        : std::runtime_error("decomposition failed at degree " +
                             std::to_string(deg) + ": coefficient " +
                             to_string(c) + " at shape " + d.str() +
                             " is not a non-negative integer"),
          degree(deg), shape(std::move(d)), coefficient(std::move(c)) {}
};

struct Decomposition {
    std::map<Partition, uint32_t> multiplicities;
    Character remainder;
    uint32_t deg_reliable = 0;

    bool ok() const { return remainder.is_zero_through(deg_reliable); }
};

// Greedy peel-off in ascending total degree: the lowest-degree slice of
// char F_D is the Schur polynomial s_D at degree |D| in both the
// multi-column and one-column cases, so each unexplained degree-d slice,
// expanded in the Schur basis, starts exactly the modules of size d.
inline Decomposition decompose(const Character& chi, uint32_t deg_reliable) {
    if (deg_reliable > chi.deg_max())
        throw std::invalid_argument("decompose: deg_reliable beyond truncation");
    if (!chi.is_symmetric())
        throw std::invalid_argument("decompose: character is not symmetric");
    for (const auto& [d, c] : chi.coefficients())
        if (!is_integer(c) || c < 0)
            throw std::invalid_argument(
                "decompose: coefficients must be non-negative integers");

    Decomposition dec{{}, Character(chi.num_vars(), chi.deg_max()), deg_reliable};
    Character work = chi;
    for (uint32_t d = 1; d <= deg_reliable; ++d) {
        Character slice = work.degree_slice(d);
        if (slice.is_zero()) continue;
        for (const auto& [lambda, c] : schur_expand_slice(slice)) {
            if (is_zero(c)) continue;
            if (!is_integer(c) || c < 0) throw DecompositionError(d, lambda, c);
            uint32_t mult = static_cast<uint32_t>(c.get_num().get_ui());
            dec.multiplicities[lambda] += mult;
            work = work - c * char_tensor_field(lambda, chi.num_vars(), chi.deg_max());
        }
    }
    dec.remainder = work;
    return dec;
}

struct OutOfHypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

// Theorem bound on |D| for constituents of B_m(A_n):
// (m-1)^2 + 2 floor((n-2)/2) (m-1), valid for m >= 3, n >= 2.
inline uint64_t diagram_size_bound(uint32_t m, uint32_t n) {
    if (m < 3 || n < 2)
        throw OutOfHypothesisError(
            "diagram size bound requires m >= 3 and n >= 2 (got m = " +
            std::to_string(m) + ", n = " + std::to_string(n) + ")");
    const uint64_t m1 = m - 1;
    return m1 * m1 + 2 * ((n - 2) / 2) * m1;
}

struct BoundReport {
    struct Entry {
        Partition shape;
        uint32_t squares;
        uint64_t bound;
        bool ok;
    };
    uint64_t bound = 0;
    std::vector<Entry> entries;
    bool pass = true;
};

inline BoundReport check_bound(const Decomposition& dec, uint32_t m, uint32_t n) {
    BoundReport report;
    report.bound = diagram_size_bound(m, n);
    for (const auto& [shape, mult] : dec.multiplicities) {
        if (mult == 0) continue;
        BoundReport::Entry e{shape, shape.size(), report.bound,
                             shape.size() <= report.bound};
        report.pass = report.pass && e.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace lcsq
