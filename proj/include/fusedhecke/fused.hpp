#pragma once

#include <algorithm>
#include <optional>

#include "fusedhecke/hecke.hpp"

namespace fh {

// Element of the fused Hecke algebra H_{k,n}(q) in the standard basis
// {F_w}, keys being the block multiplicity matrices of the distinguished
// double coset representatives.
template <class Q>
struct FusedElem {
    using C = typename Q::Coeff;
    Blocks blocks;
    std::map<FusedPerm, C> terms;

    FusedElem() = default;
    explicit FusedElem(Blocks b) : blocks(std::move(b)) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const FusedPerm& f, const C& c) {
        if (Q::is_zero(c)) return;
        auto [it, fresh] = terms.emplace(f, c);
        if (!fresh) {
            it->second += c;
            if (Q::is_zero(it->second)) terms.erase(it);
        }
    }

    bool operator==(const FusedElem& o) const {
        return blocks == o.blocks && terms == o.terms;
    }
    bool operator!=(const FusedElem& o) const { return !(*this == o); }
};

template <class Q>
class FusedAlg {
  public:
    using C = typename Q::Coeff;
    using Elem = FusedElem<Q>;
    using HElem = HeckeElem<Q>;

    explicit FusedAlg(Blocks blocks, Q ctx = Q())
        : blocks_(std::move(blocks)), hecke_(blocks_.total(), std::move(ctx)) {}

    const Blocks& blocks() const { return blocks_; }
    const HeckeAlg<Q>& hecke() const { return hecke_; }
    const Q& ctx() const { return hecke_.ctx(); }

    const std::vector<FusedPerm>& basis() const {
        if (basis_.empty()) basis_ = enumerate_fused(blocks_);
        return basis_;
    }
    std::size_t dimension() const { return basis().size(); }
    std::size_t basis_index(const FusedPerm& f) const {
        const auto& bs = basis();
        auto it = std::lower_bound(bs.begin(), bs.end(), f);
        require(it != bs.end() && *it == f, "not a basis matrix for these blocks");
        return static_cast<std::size_t>(it - bs.begin());
    }

    Elem zero() const { return Elem(blocks_); }
    Elem one() const { return basis_elem(FusedPerm::identity(blocks_)); }
    Elem basis_elem(const FusedPerm& f, C c) const {
        require(f.valid_for(blocks_), "matrix violates row/column sums");
        Elem e(blocks_);
        e.add_term(f, c);
        return e;
    }
    Elem basis_elem(const FusedPerm& f) const { return basis_elem(f, ctx().from_long(1)); }

    Elem add(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem r = a;
        for (const auto& [f, c] : b.terms) r.add_term(f, c);
        return r;
    }
    Elem scale(const Elem& a, const C& c) const {
        Elem r(a.blocks);
        if (Q::is_zero(c)) return r;
        for (const auto& [f, cf] : a.terms) {
            C x = cf * c;
            if (!Q::is_zero(x)) r.terms.emplace(f, std::move(x));
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, scale(b, ctx().from_long(-1))); }

    // Cached expansion of P_{k,n} in the sigma basis.
    const HElem& parabolic_projector() const {
        if (!proj_) proj_ = hecke_.parabolic_symmetrizer(blocks_);
        return *proj_;
    }

    // Naive lift sum c_w sigma_w; the sandwich P(.)P happens at collapse time.
    HElem lift(const Elem& a) const {
        check(a);
        HElem r(hecke_.size());
        for (const auto& [f, c] : a.terms) r.add_term(rep_from_matrix(f, blocks_), c);
        return r;
    }

    // Coordinates of P X P in the standard basis: every sigma_pi collapses
    // to q^{l(pi)-l(w)} F_w with w the distinguished representative of pi.
    Elem collapse_elem(const HElem& x) const {
        require(x.m == hecke_.size(), "element size mismatch");
        Elem r(blocks_);
        for (const auto& [pi, c] : x.terms) {
            CollapseResult cr = collapse(pi, blocks_);
            r.add_term(matrix_from_perm(cr.w, blocks_), c * ctx().qpow(cr.excess));
        }
        return r;
    }

    // Product in H_{k,n}(q) via the sandwich realization:
    // F_u F_v corresponds to P sigma_u P sigma_v P.
    Elem multiply_q(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        if (a.is_zero() || b.is_zero()) return zero();
        HElem mid = hecke_.mul(hecke_.mul(lift(a), parabolic_projector()), lift(b));
        return collapse_elem(mid);
    }

    // Combinatorial product of the q = 1 algebra of fused permutations:
    // concatenate diagrams, resolve every middle ellipse by summing over
    // all matchings of its incoming and outgoing edges, divide by
    // k_1! ... k_n!. Independent of the Hecke route.
    Elem multiply_classical(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        for (const auto* e : {&a, &b})
            for (const auto& [f, c] : e->terms)
                require(is_q_constant(c), "classical product needs q-constant coefficients");
        Elem r(blocks_);
        for (const auto& [fa, ca] : a.terms)
            for (const auto& [fb, cb] : b.terms) classical_basis_product(fa, fb, ca * cb, r);
        return r;
    }

    // Sigma_i: all strands of block i cross over block i+1 (constant blocks).
    Elem sigma_element(int i) const { return crossing_elem(i, blocks_.parts[0]); }
    // T_i: a single crossing pair between blocks i and i+1 (constant blocks).
    Elem t_element(int i) const { return crossing_elem(i, 1); }

    // Extends each basis matrix by identity diagonal blocks; the target
    // blocks must extend this algebra's blocks.
    static Elem embed(const Elem& a, const Blocks& target) {
        int n0 = a.blocks.n(), n1 = target.n();
        require(n1 >= n0, "target has fewer blocks");
        for (int i = 0; i < n0; ++i)
            require(target.parts[i] == a.blocks.parts[i], "target does not extend blocks");
        Elem r(target);
        for (const auto& [f, c] : a.terms) {
            FusedPerm g;
            g.n = static_cast<std::uint8_t>(n1);
            for (int x = 1; x <= n0; ++x)
                for (int y = 1; y <= n0; ++y) g.set(x, y, f.at(x, y));
            for (int x = n0 + 1; x <= n1; ++x) g.set(x, x, target.parts[x - 1]);
            r.add_term(g, c);
        }
        return r;
    }

  private:
    void check(const Elem& a) const { require(a.blocks == blocks_, "block mismatch"); }

    static bool is_q_constant(const RatFunc& c) { return c.is_constant(); }
    static bool is_q_constant(const Rat&) { return true; }

    Elem crossing_elem(int i, int cross) const {
        int n = blocks_.n();
        require(n >= 2, "need at least two blocks");
        int k = blocks_.parts[0];
        for (int p : blocks_.parts) require(p == k, "constant blocks required");
        require(i >= 1 && i < n, "index out of range");
        require(cross >= 0 && cross <= k, "crossing count out of range");
        FusedPerm f = FusedPerm::identity(blocks_);
        f.set(i, i, k - cross);
        f.set(i + 1, i + 1, k - cross);
        f.set(i, i + 1, cross);
        f.set(i + 1, i, cross);
        return basis_elem(f);
    }

    // One basis-pair product of the classical algebra, accumulated into out.
    void classical_basis_product(const FusedPerm& A, const FusedPerm& B, const C& coeff,
                                 Elem& out) const {
        int n = blocks_.n();
        bool trivial_matchings = true;
        for (int x : blocks_.parts)
            if (x > 1) trivial_matchings = false;
        if (trivial_matchings) {
            // single matching per middle ellipse: plain matrix composition
            FusedPerm cmat;
            cmat.n = static_cast<std::uint8_t>(n);
            for (int i = 1; i <= n; ++i)
                for (int bcol = 1; bcol <= n; ++bcol) {
                    int v = 0;
                    for (int a = 1; a <= n; ++a) v += A.at(i, a) * B.at(a, bcol);
                    cmat.set(i, bcol, v);
                }
            out.add_term(cmat, coeff);
            return;
        }
        Rat norm(1);
        for (int a = 0; a < n; ++a) norm *= Rat(factorial(blocks_.parts[a]));

        // Per middle ellipse a: nonneg matrices c^{(a)} with row sums A(i,a)
        // over i and column sums B(a,b) over b, counted with the number of
        // matchings they represent.
        FusedPerm cur;
        cur.n = static_cast<std::uint8_t>(n);
        rec_middle(A, B, 1, Rat(1), cur, coeff, norm, out);
    }

    void rec_middle(const FusedPerm& A, const FusedPerm& B, int a, const Rat& weight,
                    FusedPerm& cur, const C& coeff, const Rat& norm, Elem& out) const {
        int n = blocks_.n();
        if (a > n) {
            Rat total = weight / norm;
            out.add_term(cur, coeff * ctx().from_rat(total));
            return;
        }
        std::vector<int> rows(n), cols(n);
        for (int i = 1; i <= n; ++i) rows[i - 1] = A.at(i, a);
        for (int b = 1; b <= n; ++b) cols[b - 1] = B.at(a, b);
        Rat base(1);
        for (int b = 1; b <= n; ++b) base *= Rat(factorial(B.at(a, b)));

        std::vector<std::vector<int>> cmat(n, std::vector<int>(n, 0));
        rec_margins(rows, cols, 0, 0, cmat, [&](const std::vector<std::vector<int>>& cm) {
            Rat w = base;
            for (int i = 0; i < n; ++i) {
                w *= Rat(factorial(rows[i]));
                for (int b = 0; b < n; ++b) w /= Rat(factorial(cm[i][b]));
            }
            for (int i = 1; i <= n; ++i)
                for (int b = 1; b <= n; ++b) cur.set(i, b, cur.at(i, b) + cm[i - 1][b - 1]);
            rec_middle(A, B, a + 1, weight * w, cur, coeff, norm, out);
            for (int i = 1; i <= n; ++i)
                for (int b = 1; b <= n; ++b) cur.set(i, b, cur.at(i, b) - cm[i - 1][b - 1]);
        });
        return;
    }

    template <class F>
    static void rec_margins(const std::vector<int>& rows, std::vector<int>& cols, std::size_t i,
                            int filled, std::vector<std::vector<int>>& cm, const F& emit) {
        int n = static_cast<int>(rows.size());
        if (i == rows.size()) {
            for (int b = 0; b < n; ++b)
                if (cols[b] != 0) return;
            emit(cm);
            return;
        }
        (void)filled;
        rec_row(rows, cols, i, 0, rows[i], cm, emit);
    }

    template <class F>
    static void rec_row(const std::vector<int>& rows, std::vector<int>& cols, std::size_t i, int b,
                        int rem, std::vector<std::vector<int>>& cm, const F& emit) {
        int n = static_cast<int>(rows.size());
        if (b == n) {
            if (rem != 0) return;
            rec_margins(rows, cols, i + 1, 0, cm, emit);
            return;
        }
        int hi = std::min(rem, cols[b]);
        for (int v = 0; v <= hi; ++v) {
            cm[i][b] = v;
            cols[b] -= v;
            rec_row(rows, cols, i, b + 1, rem - v, cm, emit);
            cols[b] += v;
        }
        cm[i][b] = 0;
    }

    Blocks blocks_;
    HeckeAlg<Q> hecke_;
    mutable std::vector<FusedPerm> basis_;
    mutable std::optional<HElem> proj_;
};

} // namespace fh
