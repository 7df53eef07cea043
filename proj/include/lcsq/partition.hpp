#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcsq {

// A Young diagram: weakly decreasing non-negative parts. Trailing zeros are
// legal on input (the paper writes F_{(k_1,...,k_n)} with zeros) but are
// normalized away internally so that (2,1) and (2,1,0) name the same diagram.
struct Partition {
    std::vector<uint32_t> parts; // weakly decreasing, no trailing zeros

    Partition() = default;
    explicit Partition(std::vector<uint32_t> p) : parts(std::move(p)) {
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must weakly decrease");
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    uint32_t size() const {
        return std::accumulate(parts.begin(), parts.end(), uint32_t(0));
    }
    uint32_t rows() const { return static_cast<uint32_t>(parts.size()); }
    uint32_t columns() const { return parts.empty() ? 0 : parts[0]; }
    bool is_empty() const { return parts.empty(); }
    bool is_one_column() const { return !parts.empty() && parts[0] == 1; }

    uint32_t part(uint32_t i) const { return i < parts.size() ? parts[i] : 0; }

    // parts padded with zeros to length n, the paper's F_{(k_1,...,k_n)} form
    std::vector<uint32_t> padded(uint32_t n) const {
        std::vector<uint32_t> p = parts;
        p.resize(std::max<size_t>(n, p.size()), 0);
        return p;
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

// All partitions of s with at most max_rows rows.
inline std::vector<Partition> partitions_of(uint32_t s, uint32_t max_rows) {
    std::vector<Partition> out;
    std::vector<uint32_t> cur;
    auto rec = [&](auto&& self, uint32_t rem, uint32_t max_part) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (cur.size() == max_rows) return;
        for (uint32_t p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, s, s);
    return out;
}

} // namespace lcsq
