#include "fusedhecke/ratfunc.hpp"

namespace fh {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Int cn = num_.content(), cd = den_.content(), cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg != 1) {
        num_ = num_.divide_exact(IntPoly(cg));
        den_ = den_.divide_exact(IntPoly(cg));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::q_power(long e) {
    RatFunc r;
    if (e >= 0) {
        r.num_ = IntPoly::monomial(1, e);
        r.den_ = IntPoly(1);
    } else {
        r.num_ = IntPoly(1);
        r.den_ = IntPoly::monomial(1, -e);
    }
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Cross-reduce first to keep the final gcd cheap.
    RatFunc a(num_, o.den_), b(o.num_, den_);
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    Int cn = r.num_.content(), cd = r.den_.content(), cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg != 1) {
        r.num_ = r.num_.divide_exact(IntPoly(cg));
        r.den_ = r.den_.divide_exact(IntPoly(cg));
    }
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    require(!o.is_zero(), "division by zero in Q(q)");
    RatFunc inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.leading() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this * inv;
}

Rat RatFunc::evaluate(const Rat& q0) const {
    Rat d = den_.evaluate(q0);
    require(d != 0, "pole of rational function at q0 = " + to_string(q0));
    Rat r = num_.evaluate(q0) / d;
    r.canonicalize();
    return r;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const IntPoly& p) {
        std::string s = p.str();
        bool atom = s.find('+') == std::string::npos && s.rfind('-', 0) != 0 &&
                    s.find('-', 1) == std::string::npos && s.find('*') == std::string::npos;
        return atom ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

RatFunc q_number(long L, QNumKind kind) {
    if (L == 0) return RatFunc();
    if (kind == QNumKind::bracket) {
        // (q^L - q^{-L})/(q - q^{-1}) = (q^{2|L|} - 1) / (q^{|L|-1} (q^2 - 1)), signed
        long a = L >= 0 ? L : -L;
        IntPoly num = IntPoly::monomial(1, 2 * a) - IntPoly(1);
        IntPoly den = (IntPoly::monomial(1, 2) - IntPoly(1)).shifted(a - 1);
        RatFunc r(num, den);
        return L >= 0 ? r : -r;
    }
    long a = L >= 0 ? L : -L;
    IntPoly num = IntPoly::monomial(1, 2 * a) - IntPoly(1);
    IntPoly den = IntPoly::monomial(1, 2) - IntPoly(1);
    RatFunc r(num, den);
    if (L >= 0) return r;
    return -(r * RatFunc::q_power(-2 * a)); // {-L} = -q^{-2L}{L}
}

RatFunc q_factorial(long L, QNumKind kind) {
    require(L >= 0, "q-factorial needs L >= 0");
    RatFunc r(1);
    for (long j = 1; j <= L; ++j) r *= q_number(j, kind);
    return r;
}

} // namespace fh
