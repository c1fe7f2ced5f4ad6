#pragma once

#include <map>

#include "fusedhecke/perm.hpp"
#include "fusedhecke/qring.hpp"

namespace fh {

// Element of H_m(q) in the sigma_w basis. Terms with zero coefficient are
// never stored; all keys share the same size m.
template <class Q>
struct HeckeElem {
    using C = typename Q::Coeff;
    int m = 0;
    std::map<Perm, C> terms;

    explicit HeckeElem(int size = 0) : m(size) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const Perm& w, const C& c) {
        if (Q::is_zero(c)) return;
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (Q::is_zero(it->second)) terms.erase(it);
        }
    }

    bool operator==(const HeckeElem& o) const { return m == o.m && terms == o.terms; }
    bool operator!=(const HeckeElem& o) const { return !(*this == o); }
};

enum class Side { left, right };

template <class Q>
class HeckeAlg {
  public:
    using C = typename Q::Coeff;
    using Elem = HeckeElem<Q>;

    HeckeAlg(int m, Q ctx = Q()) : m_(m), ctx_(std::move(ctx)) {}

    int size() const { return m_; }
    const Q& ctx() const { return ctx_; }

    Elem zero() const { return Elem(m_); }
    Elem one() const { return basis(Perm::identity(m_)); }
    Elem basis(const Perm& w, C c) const {
        require(w.size() == m_, "basis term of wrong size");
        Elem e(m_);
        e.add_term(w, c);
        return e;
    }
    Elem basis(const Perm& w) const { return basis(w, ctx_.from_long(1)); }

    Elem add(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem r = a;
        for (const auto& [w, c] : b.terms) r.add_term(w, c);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, scale(b, ctx_.from_long(-1))); }
    Elem scale(const Elem& a, const C& c) const {
        Elem r(a.m);
        if (Q::is_zero(c)) return r;
        for (const auto& [w, cw] : a.terms) {
            C x = cw * c;
            if (!Q::is_zero(x)) r.terms.emplace(w, std::move(x));
        }
        return r;
    }

    // Multiply by the generator sigma_i on the given side, using
    //   sigma_w sigma_i = sigma_{w s_i}                        if l(w s_i) > l(w)
    //   sigma_w sigma_i = sigma_{w s_i} + (q - q^{-1}) sigma_w otherwise
    // and the mirrored rule on the left. The algebra product follows the
    // diagram-concatenation convention: the product of diagrams u (above)
    // and v (below) is the function v o u, so right multiplication by s_i
    // composes s_i after w.
    Elem mul_gen(const Elem& a, int i, Side side) const {
        check(a);
        require(i >= 1 && i < m_, "generator index out of range");
        C qmq = ctx_.q_minus_qinv();
        Elem r(m_);
        for (const auto& [w, c] : a.terms) {
            bool ascends;
            Perm ws;
            if (side == Side::right) {
                Perm wi = inverse(w);
                ascends = wi(i) < wi(i + 1);
                ws = compose(Perm::transposition(m_, i), w); // s_i o w: swap values
            } else {
                ascends = w(i) < w(i + 1);
                ws = w;
                std::swap(ws.img[i - 1], ws.img[i]); // w o s_i: swap positions
            }
            r.add_term(ws, c);
            if (!ascends) r.add_term(w, c * qmq);
        }
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem r(m_);
        for (const auto& [w, c] : a.terms) {
            // sigma_w * b = sigma_{i_l} * ( ... * (sigma_{i_1} * b)) for the
            // reduced word w = s_{i_1} o ... o s_{i_l}
            Elem t = scale(b, c);
            for (int i : cached_reduced_word(w)) t = mul_gen(t, i, Side::left);
            for (const auto& [u, cu] : t.terms) r.add_term(u, cu);
        }
        return r;
    }

    // q-symmetriser P_m = (sum_w q^{l(w)} sigma_w) / {m}_q!.
    Elem symmetrizer() const { return symmetrizer_on(1, m_); }

    // Block-local symmetriser on positions lo..hi (generators lo..hi-1).
    Elem symmetrizer_on(int lo, int hi) const {
        int k = hi - lo + 1;
        require(lo >= 1 && hi <= m_ && k >= 0, "block out of range");
        Elem r(m_);
        if (k <= 1) return one();
        C denom = ctx_.brace_factorial(k);
        for (const Perm& u : symmetric_group(k)) {
            Perm w = Perm::identity(m_);
            for (int j = 1; j <= k; ++j) w.img[lo - 1 + j - 1] = static_cast<std::uint8_t>(lo - 1 + u(j));
            r.add_term(w, ctx_.qpow(length(u)) / denom);
        }
        return r;
    }

    // q-antisymmetriser P'_m = (sum_w (-q^{-1})^{l(w)} sigma_w) / (sum_w q^{-2l(w)}).
    Elem antisymmetrizer() const {
        Elem r(m_);
        if (m_ <= 1) return one();
        C denom = ctx_.from_long(0);
        for (const Perm& w : symmetric_group(m_)) denom += ctx_.qpow(-2 * length(w));
        C mqinv = ctx_.from_long(0) - ctx_.qpow(-1);
        for (const Perm& w : symmetric_group(m_)) {
            int l = length(w);
            C c = ctx_.from_long(1);
            for (int t = 0; t < l; ++t) c *= mqinv;
            r.add_term(w, c / denom);
        }
        return r;
    }

    // Numerator of the antisymmetriser on positions 1..k as a product of
    // telescoping factors; equals sum_{w in S_k} (-q^{-1})^{l(w)} sigma_w.
    Elem antisym_numerator(int k) const {
        require(k >= 0 && k <= m_, "antisymmetriser width out of range");
        Elem r = one();
        for (int j = 2; j <= k; ++j) {
            // factor 1 + x s_{j-1} + x^2 s_{j-1}s_{j-2} + ... , x = -q^{-1}
            Elem f = one();
            Elem t = one();
            C x = ctx_.from_long(0) - ctx_.qpow(-1);
            C xc = ctx_.from_long(1);
            for (int i = j - 1; i >= 1; --i) {
                t = mul_gen(t, i, Side::right);
                xc *= x;
                f = add(f, scale(t, xc));
            }
            r = mul(r, f);
        }
        return r;
    }

    // P_{k,n}: product of block symmetrisers on disjoint generator ranges.
    Elem parabolic_symmetrizer(const Blocks& blocks) const {
        require(blocks.total() == m_, "blocks do not sum to m");
        Elem r = one();
        int pos = 1;
        for (int a = 0; a < blocks.n(); ++a) {
            int k = blocks.parts[a];
            if (k >= 2) r = mul(r, symmetrizer_on(pos, pos + k - 1));
            pos += k;
        }
        return r;
    }

    // sigma_w^{-1} via sigma_i^{-1} = sigma_i - (q - q^{-1}); the word of
    // sigma_w reverses, so the inverses multiply in forward word order.
    Elem basis_inverse(const Perm& w) const {
        Elem r = one();
        C qmq = ctx_.q_minus_qinv();
        for (int i : reduced_word(w)) {
            Elem t = mul_gen(r, i, Side::right);
            r = sub(t, scale(r, qmq));
        }
        return r;
    }

  private:
    void check(const Elem& a) const { require(a.m == m_, "element size mismatch"); }

    const std::vector<int>& cached_reduced_word(const Perm& w) const {
        thread_local std::map<Perm, std::vector<int>> cache;
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, reduced_word(w)).first;
        return it->second;
    }

    int m_;
    Q ctx_;
};

} // namespace fh
