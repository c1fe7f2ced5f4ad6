#include "fusedhecke/intpoly.hpp"

#include <sstream>

namespace fh {

IntPoly IntPoly::monomial(const Int& c, long exp) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(exp) + 1, Int(0));
        p.coeffs_[exp] = c;
    }
    return p;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
        if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
        if (i < o.coeffs_.size()) r.coeffs_[i] -= o.coeffs_[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::mul_int(const Int& c) const {
    if (c == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

IntPoly IntPoly::shifted(long exp) const {
    if (is_zero() || exp == 0) return *this;
    IntPoly r;
    r.coeffs_.assign(static_cast<std::size_t>(exp), Int(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c /= g;
    if (r.coeffs_.back() < 0)
        for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    require(!d.is_zero(), "division by zero polynomial");
    if (is_zero()) return IntPoly();
    long dn = degree(), dd = d.degree();
    require(dn >= dd, "inexact polynomial division");
    std::vector<Int> rem = coeffs_, quo(static_cast<std::size_t>(dn - dd) + 1, Int(0));
    for (long i = dn - dd; i >= 0; --i) {
        Int& top = rem[i + dd];
        if (top == 0) continue;
        Int qc = top / d.leading();
        require(qc * d.leading() == top, "inexact polynomial division");
        quo[i] = qc;
        for (long j = 0; j <= dd; ++j) rem[i + j] -= qc * d.coeffs_[j];
    }
    for (const auto& c : rem) require(c == 0, "inexact polynomial division");
    return from_coeffs(std::move(quo));
}

Rat IntPoly::evaluate(const Rat& q0) const {
    Rat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= q0;
        acc += Rat(coeffs_[i]);
    }
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        Int a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {
// Pseudo-remainder of a by b, deg(a) >= deg(b) > 0 allowed for deg(b)==0 too.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        long shift = a.degree() - db;
        a = a.mul_int(b.leading()) - b.mul_int(a.leading()).shifted(shift);
    }
    return a;
}
} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.mul_int(cg);
}

} // namespace fh
