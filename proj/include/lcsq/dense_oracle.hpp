#pragma once

// Brute-force cross-check for the main pipeline: dimensions of B_m(A_n) per
// total degree, computed with dense single-graded Gaussian elimination over
// exact integers. Deliberately shares nothing with the sparse multigraded
// engine: words are base-n digit strings addressed by index arithmetic, and
// elimination is fraction-free on dense primitive rows (int64 fast path,
// arbitrary-precision fallback on overflow).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lcsq::oracle {

struct Overflow {};

namespace detail {

inline uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

template <class I>
class DenseEchelon {
public:
    explicit DenseEchelon(size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

    size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<I>>& rows() const { return rows_; }

    bool insert(std::vector<I> v) {
        uint32_t steps = 0;
        for (size_t p = 0; p < dim_; ++p) {
            if (v[p] == 0) continue;
            int32_t r = pivot_row_[p];
            if (r < 0) {
                normalize(v, p);
                pivot_row_[p] = static_cast<int32_t>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            eliminate(v, rows_[static_cast<size_t>(r)], p);
            if constexpr (!std::is_same_v<I, int64_t>) {
                if (++steps % 8 == 0) strip_content(v, p);
            }
        }
        return false;
    }

private:
    size_t dim_;
    std::vector<std::vector<I>> rows_;
    std::vector<int32_t> pivot_row_;

    // v <- lead(row)*v - v[p]*row, fraction-free
    static void eliminate(std::vector<I>& v, const std::vector<I>& row, size_t p) {
        if constexpr (std::is_same_v<I, int64_t>) {
            const int64_t a = row[p], c = v[p];
            bool big = false;
            for (size_t q = p; q < v.size(); ++q) {
                __int128 t = static_cast<__int128>(a) * v[q] -
                             static_cast<__int128>(c) * row[q];
                if (t > INT64_MAX || t < INT64_MIN) throw Overflow{};
                v[q] = static_cast<int64_t>(t);
                if (v[q] > (int64_t(1) << 40) || v[q] < -(int64_t(1) << 40))
                    big = true;
            }
            if (big) strip_content(v, p);
        } else {
            const I a = row[p], c = v[p];
            for (size_t q = p; q < v.size(); ++q) v[q] = a * v[q] - c * row[q];
        }
    }

    static void strip_content(std::vector<I>& v, size_t from) {
        if constexpr (std::is_same_v<I, int64_t>) {
            int64_t g = 0;
            for (size_t q = from; q < v.size() && g != 1; ++q)
                g = std::gcd(g, v[q] < 0 ? -v[q] : v[q]);
            if (g > 1)
                for (size_t q = from; q < v.size(); ++q) v[q] /= g;
        } else {
            I g = 0;
            for (size_t q = from; q < v.size(); ++q) {
                if (sgn(v[q]) != 0)
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[q].get_mpz_t());
                if (g == 1) break;
            }
            if (g > 1)
                for (size_t q = from; q < v.size(); ++q) v[q] /= g;
        }
    }

    static void normalize(std::vector<I>& v, size_t p) {
        strip_content(v, p);
        if (v[p] < 0)
            for (size_t q = p; q < v.size(); ++q) v[q] = -v[q];
    }
};

// Span of [word, u] over words of degree e and basis elements u of the
// previous level, inside the full degree-d word space (dimension n^d).
// prev[e2] holds the previous level's echelon basis in degree e2.
template <class I>
uint64_t level_rank(uint32_t n, uint32_t d, uint32_t level,
                    const std::map<uint32_t, std::vector<std::vector<int64_t>>>& prev,
                    uint64_t target_rank,
                    std::vector<std::vector<int64_t>>* out_basis) {
    const uint64_t dim = ipow(n, d);
    DenseEchelon<I> ech(dim);
    bool saturated = false;
    for (uint32_t e = 1; e + (level - 1) <= d && !saturated; ++e) {
        const uint32_t e2 = d - e;
        const uint64_t nw = ipow(n, e), nu = ipow(n, e2);
        if (level == 2) {
            // [w, u] for word pairs: +1 at wu, -1 at uw
            for (uint64_t iw = 0; iw < nw && !saturated; ++iw) {
                for (uint64_t iu = 0; iu < nu; ++iu) {
                    std::vector<I> row(dim, I(0));
                    row[iw * nu + iu] += 1;
                    row[iu * nw + iw] -= 1;
                    ech.insert(std::move(row));
                    if (ech.rank() == target_rank) { saturated = true; break; }
                }
            }
        } else {
            auto it = prev.find(e2);
            if (it == prev.end()) continue;
            for (uint64_t iw = 0; iw < nw && !saturated; ++iw) {
                for (const auto& u : it->second) {
                    std::vector<I> row(dim, I(0));
                    for (uint64_t iu = 0; iu < nu; ++iu) {
                        if (u[iu] == 0) continue;
                        row[iw * nu + iu] += u[iu];
                        row[iu * nw + iw] -= u[iu];
                    }
                    ech.insert(std::move(row));
                    if (ech.rank() == target_rank) { saturated = true; break; }
                }
            }
        }
    }
    if (out_basis) {
        out_basis->clear();
        for (const auto& r : ech.rows()) {
            std::vector<int64_t> cast;
            cast.reserve(r.size());
            for (const auto& x : r) {
                if constexpr (std::is_same_v<I, int64_t>) {
                    cast.push_back(x);
                } else {
                    if (!x.fits_slong_p()) throw Overflow{};
                    cast.push_back(x.get_si());
                }
            }
            out_basis->push_back(std::move(cast));
        }
    }
    return ech.rank();
}

} // namespace detail

// ranks[m][d] = dim L_m(A_n)[d] for m = 1..m_levels, d = 0..deg_max
inline std::map<uint32_t, std::vector<uint64_t>>
lcs_ranks(uint32_t n, uint32_t m_levels, uint32_t deg_max) {
    using detail::ipow;
    std::map<uint32_t, std::vector<uint64_t>> ranks;
    ranks[1].resize(deg_max + 1);
    for (uint32_t d = 0; d <= deg_max; ++d) ranks[1][d] = ipow(n, d);

    // prev[d] = echelon basis of L_{m-1}[d]; level 2 brackets words directly
    std::map<uint32_t, std::vector<std::vector<int64_t>>> prev;
    for (uint32_t level = 2; level <= m_levels; ++level) {
        std::map<uint32_t, std::vector<std::vector<int64_t>>> cur;
        ranks[level].assign(deg_max + 1, 0);
        for (uint32_t d = level; d <= deg_max; ++d) {
            const bool keep = level < m_levels;
            std::vector<std::vector<int64_t>> basis;
            uint64_t target = ranks[level - 1][d];
            uint64_t r;
            try {
                r = detail::level_rank<int64_t>(n, d, level, prev, target,
                                                keep ? &basis : nullptr);
            } catch (const Overflow&) {
                r = detail::level_rank<mpz_class>(n, d, level, prev, target,
                                                  keep ? &basis : nullptr);
            }
            ranks[level][d] = r;
            if (keep) cur[d] = std::move(basis);
        }
        prev = std::move(cur);
    }
    return ranks;
}

// dims[m][d] = dim B_m(A_n)[d] = dim L_m[d] - dim L_{m+1}[d]
inline std::map<uint32_t, std::vector<uint64_t>>
b_dims(uint32_t n, uint32_t m_max, uint32_t deg_max) {
    auto ranks = lcs_ranks(n, m_max + 1, deg_max);
    std::map<uint32_t, std::vector<uint64_t>> dims;
    for (uint32_t m = 1; m <= m_max; ++m) {
        dims[m].resize(deg_max + 1);
        for (uint32_t d = 0; d <= deg_max; ++d)
            dims[m][d] = ranks[m][d] - ranks[m + 1][d];
    }
    return dims;
}

namespace detail {

// canonical (lexicographically least) rotation of the degree-d word with
// the given index, as an index
inline uint64_t min_rotation_index(uint64_t idx, uint32_t n, uint32_t d) {
    if (d < 2) return idx;
    std::vector<uint32_t> digits(d);
    uint64_t t = idx;
    for (uint32_t i = 0; i < d; ++i) {
        digits[d - 1 - i] = static_cast<uint32_t>(t % n);
        t /= n;
    }
    uint64_t best = idx;
    std::vector<uint32_t> rot = digits;
    for (uint32_t k = 1; k < d; ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        uint64_t v = 0;
        for (uint32_t i = 0; i < d; ++i) v = v * n + rot[i];
        best = std::min(best, v);
    }
    return best;
}

struct CyclicIndex {
    uint64_t num_classes = 0;
    std::vector<uint32_t> class_of; // word index -> class column
};

inline CyclicIndex cyclic_index(uint32_t n, uint32_t d) {
    const uint64_t dim = ipow(n, d);
    CyclicIndex ci;
    ci.class_of.resize(dim);
    std::map<uint64_t, uint32_t> col;
    for (uint64_t idx = 0; idx < dim; ++idx) {
        uint64_t rep = min_rotation_index(idx, n, d);
        auto it = col.find(rep);
        if (it == col.end())
            it = col.emplace(rep, static_cast<uint32_t>(col.size())).first;
        ci.class_of[idx] = it->second;
    }
    ci.num_classes = col.size();
    return ci;
}

} // namespace detail

// number of cyclic words = dim B_1(A_n)[d], for d = 0..deg_max
inline std::vector<uint64_t> b1_dims(uint32_t n, uint32_t deg_max) {
    std::vector<uint64_t> out(deg_max + 1);
    for (uint32_t d = 0; d <= deg_max; ++d)
        out[d] = detail::cyclic_index(n, d).num_classes;
    return out;
}

namespace detail {

template <class I>
uint64_t z_rank(uint32_t n, uint32_t d, const CyclicIndex& ci) {
    DenseEchelon<I> ech(ci.num_classes);
    for (uint32_t eu = 0; eu + 3 <= d; ++eu)
        for (uint32_t ea = 1; eu + ea + 2 <= d; ++ea)
            for (uint32_t eb = 1; eu + ea + eb + 1 <= d; ++eb) {
                const uint32_t ec = d - eu - ea - eb;
                const uint64_t nu = ipow(n, eu), na = ipow(n, ea),
                               nb = ipow(n, eb), nc = ipow(n, ec);
                const uint64_t tail = ipow(n, d - eu);
                for (uint64_t iu = 0; iu < nu; ++iu)
                    for (uint64_t ia = 0; ia < na; ++ia)
                        for (uint64_t ib = 0; ib < nb; ++ib) {
                            // [[a,b],c] is antisymmetric in (a,b)
                            if (std::pair(ea, ia) >= std::pair(eb, ib)) continue;
                            for (uint64_t ic = 0; ic < nc; ++ic) {
                                // u([[a,b],c]) = u(abc - bac - cab + cba)
                                std::vector<I> row(ci.num_classes, I(0));
                                auto add = [&](uint64_t w, int s) {
                                    row[ci.class_of[iu * tail + w]] += s;
                                };
                                add((ia * nb + ib) * nc + ic, +1);
                                add((ib * na + ia) * nc + ic, -1);
                                add((ic * na + ia) * nb + ib, -1);
                                add((ic * nb + ib) * na + ia, +1);
                                ech.insert(std::move(row));
                            }
                        }
            }
    return ech.rank();
}

} // namespace detail

// dim Z[d]: image in A/[A,A] of the span of u * [[a,b],c] over words
// (u possibly empty; two-sided multiples fold into one side because
// pq = qp in the cyclic quotient)
inline std::vector<uint64_t> z_dims(uint32_t n, uint32_t deg_max) {
    std::vector<uint64_t> out(deg_max + 1, 0);
    for (uint32_t d = 3; d <= deg_max; ++d) {
        auto ci = detail::cyclic_index(n, d);
        try {
            out[d] = detail::z_rank<int64_t>(n, d, ci);
        } catch (const Overflow&) {
            out[d] = detail::z_rank<mpz_class>(n, d, ci);
        }
    }
    return out;
}

// dim of (A/[A,A])/Z per degree
inline std::vector<uint64_t> bbar1_dims(uint32_t n, uint32_t deg_max) {
    auto classes = b1_dims(n, deg_max);
    auto z = z_dims(n, deg_max);
    std::vector<uint64_t> out(deg_max + 1);
    for (uint32_t d = 0; d <= deg_max; ++d) out[d] = classes[d] - z[d];
    return out;
}

} // namespace lcsq::oracle
