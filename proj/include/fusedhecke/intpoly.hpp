#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fusedhecke/rational.hpp"

namespace fh {

// Integer-coefficient polynomial in q. Stored dense, lowest degree first,
// trimmed so that coeffs.empty() (the zero polynomial) or coeffs.back() != 0.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(long c) {
        if (c != 0) coeffs_.emplace_back(c);
    }
    explicit IntPoly(const Int& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    static IntPoly monomial(const Int& c, long exp);
    static IntPoly from_coeffs(std::vector<Int> cs) {
        IntPoly p;
        p.coeffs_ = std::move(cs);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
    const Int& leading() const { return coeffs_.back(); }
    Int coeff(long exp) const {
        if (exp < 0 || exp >= static_cast<long>(coeffs_.size())) return Int(0);
        return coeffs_[exp];
    }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly mul_int(const Int& c) const;
    IntPoly shifted(long exp) const; // multiply by q^exp, exp >= 0

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }
    bool operator<(const IntPoly& o) const; // total order for containers

    Int content() const; // gcd of coefficients, >= 0; 0 for zero poly
    IntPoly primitive() const;
    // Exact division; throws if the division leaves a remainder.
    IntPoly divide_exact(const IntPoly& d) const;
    Rat evaluate(const Rat& q0) const;

    std::string str() const; // canonical text, e.g. "q^2+1", "-2*q"

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

// Primitive gcd over Z[q], normalized with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

} // namespace fh
