#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmc {

// Exact arithmetic used throughout the combinatorial layers. n! overflows
// 64-bit at n = 21, so dimensions and characters are kept in mpz/mpq.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit a machine long: " + v.get_str());
    return v.get_si();
}

// Exact integer value of a rational known to be integral.
inline Int rat_to_int(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1) throw std::domain_error("expected integral rational, got " + c.get_str());
    return c.get_num();
}

}  // namespace qmc
