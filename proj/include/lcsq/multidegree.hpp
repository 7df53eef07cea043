#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lcsq {

// Exponent of a torus monomial t^a: one non-negative count per generator.
struct MultiDegree {
    std::vector<uint32_t> counts;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<uint32_t> c) : counts(std::move(c)) {}

    static MultiDegree zero(uint32_t n) { return MultiDegree(std::vector<uint32_t>(n, 0)); }
    static MultiDegree unit(uint32_t n, uint32_t i) {
        MultiDegree d = zero(n);
        d.counts[i] = 1;
        return d;
    }

    uint32_t num_vars() const { return static_cast<uint32_t>(counts.size()); }
    uint32_t total() const {
        return std::accumulate(counts.begin(), counts.end(), uint32_t(0));
    }

    bool dominates(const MultiDegree& o) const {
        for (size_t i = 0; i < counts.size(); ++i)
            if (counts[i] < o.counts[i]) return false;
        return true;
    }

    MultiDegree sorted_descending() const {
        MultiDegree d = *this;
        std::sort(d.counts.begin(), d.counts.end(), std::greater<uint32_t>());
        return d;
    }

    friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
        MultiDegree r = a;
        for (size_t i = 0; i < r.counts.size(); ++i) r.counts[i] += b.counts[i];
        return r;
    }
    friend MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
        MultiDegree r = a;
        for (size_t i = 0; i < r.counts.size(); ++i) {
            if (r.counts[i] < b.counts[i])
                throw std::invalid_argument("MultiDegree: negative difference");
            r.counts[i] -= b.counts[i];
        }
        return r;
    }

    auto operator<=>(const MultiDegree&) const = default;
};

// All multidegrees in n variables of total degree exactly d, in lexicographic
// order of the count vectors.
inline std::vector<MultiDegree> multidegrees_of_total(uint32_t n, uint32_t d) {
    std::vector<MultiDegree> out;
    std::vector<uint32_t> cur(n, 0);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t pos, uint32_t rem) {
        if (pos + 1 == n) {
            cur[pos] = rem;
            out.emplace_back(cur);
            return;
        }
        for (uint32_t v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (n == 0) {
        if (d == 0) out.emplace_back(cur);
        return out;
    }
    rec(0, d);
    return out;
}

inline std::vector<MultiDegree> multidegrees_up_to(uint32_t n, uint32_t deg_max) {
    std::vector<MultiDegree> out;
    for (uint32_t d = 0; d <= deg_max; ++d) {
        auto layer = multidegrees_of_total(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace lcsq
