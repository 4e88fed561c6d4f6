#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace slicekit {

// Exact arbitrary-precision rational scalar.  All arithmetic in the library
// is over these; nothing is ever rounded.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_integer(const Integer& n) { return Rational(n); }

inline Integer factorial(unsigned n) {
    Integer acc = 1;
    for (unsigned k = 2; k <= n; ++k) acc *= static_cast<unsigned long>(k);
    return acc;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace slicekit
