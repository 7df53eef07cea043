#pragma once

#include "lcsq/lcs_engine.hpp"
#include "lcsq/multidegree.hpp"
#include "lcsq/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace lcsq {

// Truncated formal power series in the torus variables t_1..t_n with exact
// rational coefficients; the single-variable Hilbert series is the n = 1
// case or the specialization t_i := t.
class Character {
public:
    Character(uint32_t num_vars, uint32_t deg_max)
        : num_vars_(num_vars), deg_max_(deg_max) {}

    static Character one(uint32_t num_vars, uint32_t deg_max) {
        Character c(num_vars, deg_max);
        c.add(MultiDegree::zero(num_vars), Rational(1));
        return c;
    }

    // e_j(t_1..t_n), the character of Lambda^j(C^n)
    static Character elementary(uint32_t num_vars, uint32_t j, uint32_t deg_max) {
        Character c(num_vars, deg_max);
        std::vector<uint32_t> idx(j);
        auto rec = [&](auto&& self, uint32_t pos, uint32_t lo) -> void {
            if (pos == j) {
                MultiDegree d = MultiDegree::zero(num_vars);
                for (uint32_t i : idx) d.counts[i] = 1;
                c.add(d, Rational(1));
                return;
            }
            for (uint32_t i = lo; i < num_vars; ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        if (j <= num_vars && j <= deg_max) rec(rec, 0, 0);
        return c;
    }

    uint32_t num_vars() const { return num_vars_; }
    uint32_t deg_max() const { return deg_max_; }
    const std::map<MultiDegree, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const MultiDegree& d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(const MultiDegree& d, const Rational& c) {
        if (lcsq::is_zero(c) || d.total() > deg_max_) return;
        auto [it, inserted] = coeffs_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (lcsq::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    friend Character operator+(const Character& a, const Character& b) {
        check_compatible(a, b);
        Character r = a;
        for (const auto& [d, c] : b.coeffs_) r.add(d, c);
        return r;
    }

    friend Character operator-(const Character& a, const Character& b) {
        check_compatible(a, b);
        Character r = a;
        for (const auto& [d, c] : b.coeffs_) r.add(d, -c);
        return r;
    }

    friend Character operator*(const Rational& s, const Character& a) {
        Character r(a.num_vars_, a.deg_max_);
        for (const auto& [d, c] : a.coeffs_) r.add(d, s * c);
        return r;
    }

    friend Character operator*(const Character& a, const Character& b) {
        check_compatible(a, b);
        Character r(a.num_vars_, a.deg_max_);
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) {
                if (da.total() + db.total() > a.deg_max_) continue;
                r.add(da + db, ca * cb);
            }
        return r;
    }

    friend bool operator==(const Character& a, const Character& b) {
        return a.num_vars_ == b.num_vars_ && a.coeffs_ == b.coeffs_;
    }

    // multiply by 1/(1 - t_i) = 1 + t_i + t_i^2 + ..., truncated; exact per
    // retained coefficient
    Character times_geometric(uint32_t var) const {
        Character r(num_vars_, deg_max_);
        // prefix sums along the var axis: process multidegrees so that
        // d - e_var comes first (it is lexicographically smaller)
        std::map<MultiDegree, Rational> acc(coeffs_);
        for (auto it = acc.begin(); it != acc.end(); ++it) {
            MultiDegree up = it->first;
            up.counts[var] += 1;
            if (up.total() > deg_max_) continue;
            acc[up] += it->second; // creates the entry if absent
        }
        for (const auto& [d, c] : acc) r.add(d, c);
        return r;
    }

    // character of C[x_1..x_n]-many copies: multiply by prod_i 1/(1 - t_i)
    Character times_full_polynomial_ring() const {
        Character r = *this;
        for (uint32_t i = 0; i < num_vars_; ++i) r = r.times_geometric(i);
        return r;
    }

    bool is_symmetric() const {
        for (const auto& [d, c] : coeffs_) {
            std::vector<uint32_t> counts = d.counts;
            std::sort(counts.begin(), counts.end());
            do {
                if (coeff(MultiDegree(counts)) != c) return false;
            } while (std::next_permutation(counts.begin(), counts.end()));
        }
        return true;
    }

    // coefficients of the single-variable specialization t_i := t
    std::vector<Rational> single_t() const {
        std::vector<Rational> out(deg_max_ + 1, Rational(0));
        for (const auto& [d, c] : coeffs_) out[d.total()] += c;
        return out;
    }

    Character degree_slice(uint32_t d) const {
        Character r(num_vars_, deg_max_);
        for (const auto& [delta, c] : coeffs_)
            if (delta.total() == d) r.add(delta, c);
        return r;
    }

    bool is_zero_through(uint32_t d) const {
        for (const auto& [delta, c] : coeffs_)
            if (delta.total() <= d) return false;
        return true;
    }

    bool dominates_coefficientwise(const Character& other) const {
        check_compatible(*this, other);
        for (const auto& [d, c] : other.coeffs_)
            if (coeff(d) < c) return false;
        return true;
    }

    static void check_compatible(const Character& a, const Character& b) {
        if (a.num_vars_ != b.num_vars_)
            throw std::invalid_argument("Character: variable-count mismatch");
        if (a.deg_max_ != b.deg_max_)
            throw std::invalid_argument("Character: truncation mismatch");
    }

private:
    uint32_t num_vars_;
    uint32_t deg_max_;
    std::map<MultiDegree, Rational> coeffs_;
};

inline Character to_character(const BQuotientCharacter& chi, uint32_t num_vars) {
    Character c(num_vars, chi.deg_max);
    for (const auto& [d, dim] : chi.coefficients)
        c.add(d, Rational(static_cast<long>(dim)));
    return c;
}

} // namespace lcsq
