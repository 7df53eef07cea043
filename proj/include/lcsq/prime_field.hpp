#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcsq {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
//
// This is the scalar for the opt-in probabilistic fast mode: the rank of an
// integer matrix over F_p is at most its rank over Q, with equality outside
// a finite set of primes. Acceptance runs always use Rational; F_p results
// are only ever reported next to a rational cross-check.
class Fp {
public:
    static constexpr uint64_t modulus = (uint64_t(1) << 61) - 1;

    Fp() = default;
    explicit Fp(long v) {
        long r = v % static_cast<long>(modulus);
        if (r < 0) r += static_cast<long>(modulus);
        value_ = static_cast<uint64_t>(r);
    }

    uint64_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend Fp operator+(Fp a, Fp b) { return from_raw(add(a.value_, b.value_)); }
    friend Fp operator-(Fp a, Fp b) { return from_raw(sub(a.value_, b.value_)); }
    friend Fp operator*(Fp a, Fp b) { return from_raw(mul(a.value_, b.value_)); }
    friend Fp operator/(Fp a, Fp b) {
        if (b.value_ == 0) throw std::domain_error("Fp: division by zero");
        return from_raw(mul(a.value_, inverse(b.value_)));
    }
    Fp operator-() const { return from_raw(value_ == 0 ? 0 : modulus - value_); }
    Fp& operator+=(Fp o) { value_ = add(value_, o.value_); return *this; }
    Fp& operator-=(Fp o) { value_ = sub(value_, o.value_); return *this; }
    Fp& operator*=(Fp o) { value_ = mul(value_, o.value_); return *this; }
    friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

private:
    uint64_t value_ = 0;

    static Fp from_raw(uint64_t v) {
        Fp r;
        r.value_ = v;
        return r;
    }
    static uint64_t add(uint64_t a, uint64_t b) {
        uint64_t s = a + b; // < 2^62, no overflow
        return s >= modulus ? s - modulus : s;
    }
    static uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + modulus - b; }
    static uint64_t mul(uint64_t a, uint64_t b) {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        // Mersenne reduction: t = hi*2^61 + lo, 2^61 = 1 (mod p).
        uint64_t lo = static_cast<uint64_t>(t) & modulus;
        uint64_t hi = static_cast<uint64_t>(t >> 61);
        return add(lo, hi % modulus);
    }
    static uint64_t inverse(uint64_t a) {
        // Fermat: a^(p-2)
        uint64_t result = 1, base = a, e = modulus - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

} // namespace lcsq
