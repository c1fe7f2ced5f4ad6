#pragma once

#include <string>

#include "fusedhecke/intpoly.hpp"

namespace fh {

// Element of Q(q): reduced fraction num/den of integer polynomials.
// Normal form: poly gcd(num,den) constant, gcd(content(num),content(den)) = 1,
// leading coefficient of den positive. Equality is structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Int& c) : num_(c), den_(1) {}
    RatFunc(const Rat& r) : num_(r.get_num()), den_(r.get_den()) {}
    RatFunc(IntPoly num, IntPoly den);
    explicit RatFunc(IntPoly num) : num_(std::move(num)), den_(1) {}

    static RatFunc q_power(long e); // q^e, any sign of e

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const; // throws on o == 0
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rat evaluate(const Rat& q0) const; // throws on a pole

    std::string str() const; // canonical text, e.g. "(q^2+1)/q"

  private:
    IntPoly num_, den_;
};

inline RatFunc operator*(long c, const RatFunc& f) { return RatFunc(c) * f; }

// q-numbers per the two standard conventions:
//   bracket: [L]_q = (q^L - q^{-L})/(q - q^{-1})
//   brace:   {L}_q = (q^{2L} - 1)/(q^2 - 1)
enum class QNumKind { bracket, brace };

RatFunc q_number(long L, QNumKind kind);
RatFunc q_factorial(long L, QNumKind kind); // L >= 0

} // namespace fh
