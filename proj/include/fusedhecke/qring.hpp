#pragma once

#include "fusedhecke/ratfunc.hpp"

namespace fh {

// Coefficient contexts for the algebra kernels. The same multiplication
// routines run over Q(q) (SymbolicQ) or over Q with q specialized to a
// non-root-of-unity rational q0 (NumericQ). NumericQ requires q0 not in
// {0, 1, -1} so that every {k}_q! stays invertible.

struct SymbolicQ {
    using Coeff = RatFunc;
    Coeff qpow(long e) const { return RatFunc::q_power(e); }
    Coeff q_minus_qinv() const { return qpow(1) - qpow(-1); }
    Coeff from_long(long v) const { return RatFunc(v); }
    Coeff from_rat(const Rat& r) const { return RatFunc(r); }
    static bool is_zero(const Coeff& c) { return c.is_zero(); }
    Coeff brace_factorial(long m) const {
        Coeff r = from_long(1);
        for (long j = 1; j <= m; ++j) {
            Coeff br = from_long(0);
            for (long t = 0; t < j; ++t) br += qpow(2 * t);
            r *= br;
        }
        return r;
    }
};

struct NumericQ {
    Rat q0;
    explicit NumericQ(const Rat& q) : q0(q) {
        require(q0 != 0 && q0 != 1 && q0 != -1, "q0 must be generic (not 0, 1, -1)");
    }
    using Coeff = Rat;
    Coeff qpow(long e) const {
        Rat r = 1;
        Rat base = e >= 0 ? q0 : Rat(q0.get_den(), q0.get_num());
        if (e < 0) base.canonicalize();
        for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
        return r;
    }
    Coeff q_minus_qinv() const { return qpow(1) - qpow(-1); }
    Coeff from_long(long v) const { return Rat(v); }
    Coeff from_rat(const Rat& r) const { return r; }
    static bool is_zero(const Coeff& c) { return c == 0; }
    Coeff brace_factorial(long m) const {
        Coeff r = 1;
        for (long j = 1; j <= m; ++j) {
            Coeff br = 0;
            for (long t = 0; t < j; ++t) br += qpow(2 * t);
            r *= br;
        }
        return r;
    }
};

// Evaluation context with q0 = 1: realizes the classical specialization
// H_m(1) = C S_m of every q-dependent routine. Division by brace
// factorials stays valid ({k}_1! = k!).
struct ClassicalQ {
    using Coeff = Rat;
    Coeff qpow(long) const { return 1; }
    Coeff q_minus_qinv() const { return 0; }
    Coeff from_long(long v) const { return Rat(v); }
    Coeff from_rat(const Rat& r) const { return r; }
    static bool is_zero(const Coeff& c) { return c == 0; }
    Coeff brace_factorial(long m) const { return Rat(factorial(m)); }
};

} // namespace fh
