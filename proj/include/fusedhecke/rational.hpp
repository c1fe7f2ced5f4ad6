#pragma once

#include <gmpxx.h>

#include <string>

#include "fusedhecke/util.hpp"

namespace fh {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Parses "a", "-a" or "a/b".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) fail("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace fh
