#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lcsq {

// Exact scalar types. Every dimension claim in this library is an exact
// equality, so there is no floating point anywhere in the computational core.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace lcsq
