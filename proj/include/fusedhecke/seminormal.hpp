#pragma once

#include "fusedhecke/fused.hpp"
#include "fusedhecke/linalg.hpp"
#include "fusedhecke/shapes.hpp"

namespace fh {

// Dense square matrix over the coefficient field of Q.
template <class Q>
struct Mat {
    using C = typename Q::Coeff;
    int n = 0;
    std::vector<C> a;

    Mat() = default;
    explicit Mat(int size, C fill = C()) : n(size), a(static_cast<std::size_t>(size) * size, fill) {}
    static Mat identity(int size, const Q& ctx) {
        Mat m(size, ctx.from_long(0));
        for (int i = 0; i < size; ++i) m.at(i, i) = ctx.from_long(1);
        return m;
    }
    C& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const C& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const C& x : a)
            if (!Q::is_zero(x)) return false;
        return true;
    }
    C trace() const {
        C t = C();
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }

    Mat operator*(const Mat& o) const {
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const C& x = at(i, l);
                if (Q::is_zero(x)) continue;
                for (int j = 0; j < n; ++j) {
                    if (Q::is_zero(o.at(l, j))) continue;
                    r.at(i, j) += x * o.at(l, j);
                }
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }
    Mat scaled(const C& c) const {
        Mat r = *this;
        for (auto& x : r.a) x *= c;
        return r;
    }
    std::vector<C> apply(const std::vector<C>& v) const {
        std::vector<C> r(static_cast<std::size_t>(n), C());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (Q::is_zero(at(i, j)) || Q::is_zero(v[j])) continue;
                r[i] += at(i, j) * v[j];
            }
        return r;
    }
    std::vector<std::vector<C>> rows() const {
        std::vector<std::vector<C>> r(n);
        for (int i = 0; i < n; ++i) r[i] = std::vector<C>(a.begin() + static_cast<long>(i) * n,
                                                          a.begin() + static_cast<long>(i + 1) * n);
        return r;
    }
};

// Seminormal representation of H_m(q) on a skew shape: the basis is the
// standard tableaux and the generators act through contents.
template <class Q>
class SeminormalRep {
  public:
    using C = typename Q::Coeff;

    SeminormalRep(SkewShape shape, Q ctx = Q())
        : shape_(std::move(shape)), ctx_(std::move(ctx)), basis_(enumerate_standard(shape_)) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].reading_word()] = i;
    }

    const SkewShape& shape() const { return shape_; }
    const Q& ctx() const { return ctx_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int strands() const { return shape_.size(); }
    const std::vector<Tableau>& basis() const { return basis_; }

    // Matrix of sigma_i: on v_t the diagonal part is
    // (q-q^{-1})c_{i+1}/(c_{i+1}-c_i), the off-diagonal part
    // (q c_{i+1}-q^{-1}c_i)/(c_{i+1}-c_i) towards v_{s_i(t)} when standard.
    Mat<Q> generator(int i) const {
        require(i >= 1 && i < strands(), "generator index out of range");
        Mat<Q> g(dim(), ctx_.from_long(0));
        for (int j = 0; j < dim(); ++j) {
            const Tableau& t = basis_[j];
            C ci = ctx_.qpow(2 * t.content_of(i));
            C ci1 = ctx_.qpow(2 * t.content_of(i + 1));
            C den = ci1 - ci;
            g.at(j, j) = ctx_.q_minus_qinv() * ci1 / den;
            Tableau st = apply_transposition(t, i);
            if (st.is_standard()) {
                std::size_t jj = index_.at(st.reading_word());
                g.at(static_cast<int>(jj), j) = (ctx_.qpow(1) * ci1 - ctx_.qpow(-1) * ci) / den;
            }
        }
        return g;
    }

    // Same matrix through axial distances: q^d/[d] and [d+1]/[d].
    Mat<Q> generator_axial(int i) const {
        require(i >= 1 && i < strands(), "generator index out of range");
        auto bracket = [&](long L) {
            return (ctx_.qpow(L) - ctx_.qpow(-L)) / (ctx_.qpow(1) - ctx_.qpow(-1));
        };
        Mat<Q> g(dim(), ctx_.from_long(0));
        for (int j = 0; j < dim(); ++j) {
            const Tableau& t = basis_[j];
            long d = t.content_of(i + 1) - t.content_of(i);
            g.at(j, j) = ctx_.qpow(d) / bracket(d);
            Tableau st = apply_transposition(t, i);
            if (st.is_standard()) {
                std::size_t jj = index_.at(st.reading_word());
                g.at(static_cast<int>(jj), j) = bracket(d + 1) / bracket(d);
            }
        }
        return g;
    }

    // rho(sigma_w): generator matrices composed along the reduced word;
    // sigma_w = sigma_{i_l} * ... * sigma_{i_1} for w = s_{i_1} o ... o s_{i_l},
    // so the first word letter acts first (rightmost factor).
    Mat<Q> sigma(const Perm& w) const {
        Mat<Q> r = Mat<Q>::identity(dim(), ctx_);
        for (int i : reduced_word(w)) r = gen_cached(i) * r;
        return r;
    }

    std::vector<C> sigma_apply(const Perm& w, std::vector<C> v) const {
        for (int i : reduced_word(w)) v = gen_cached(i).apply(v);
        return v;
    }

    // rho(sigma_w^{-1}): the inverses multiply in forward word order,
    // each factor being gen - (q - q^{-1}) Id.
    Mat<Q> sigma_inverse(const Perm& w) const {
        Mat<Q> r = Mat<Q>::identity(dim(), ctx_);
        C qmq = ctx_.q_minus_qinv();
        for (int i : reduced_word(w)) r = r * gen_cached(i) - r.scaled(qmq);
        return r;
    }

    Mat<Q> rep(const HeckeElem<Q>& e) const {
        require(e.m == strands(), "element size mismatch");
        Mat<Q> r(dim(), ctx_.from_long(0));
        for (const auto& [w, c] : e.terms) r = r + sigma(w).scaled(c);
        return r;
    }

    // rho of the symmetriser numerator sum_{w in S_k} q^{l(w)} sigma_w on
    // positions lo..hi, via the telescoping factorization of the basis.
    Mat<Q> sym_numerator(int lo, int hi, bool anti) const {
        Mat<Q> r = Mat<Q>::identity(dim(), ctx_);
        C x = anti ? (ctx_.from_long(0) - ctx_.qpow(-1)) : ctx_.qpow(1);
        for (int j = 2; j <= hi - lo + 1; ++j) {
            Mat<Q> f = Mat<Q>::identity(dim(), ctx_);
            Mat<Q> t = Mat<Q>::identity(dim(), ctx_);
            C xc = ctx_.from_long(1);
            for (int i = lo + j - 2; i >= lo; --i) {
                t = t * gen_cached(i); // t * sigma_i appends to the word
                xc *= x;
                f = f + t.scaled(xc);
            }
            r = r * f;
        }
        return r;
    }

    // rho(P_{k,n}) for the blocks of this shape's size.
    Mat<Q> parabolic_projector(const Blocks& blocks) const {
        require(blocks.total() == strands(), "blocks do not sum to the strand count");
        Mat<Q> r = Mat<Q>::identity(dim(), ctx_);
        int pos = 1;
        for (int a = 0; a < blocks.n(); ++a) {
            int k = blocks.parts[a];
            if (k >= 2) {
                Mat<Q> num = sym_numerator(pos, pos + k - 1, false);
                r = r * num.scaled(ctx_.from_long(1) / ctx_.brace_factorial(k));
            }
            pos += k;
        }
        return r;
    }

  private:
    const Mat<Q>& gen_cached(int i) const {
        if (gens_.empty()) gens_.resize(static_cast<std::size_t>(std::max(0, strands() - 1)));
        auto& slot = gens_[static_cast<std::size_t>(i - 1)];
        if (slot.n == 0 && dim() > 0) slot = generator(i);
        return slot;
    }

    SkewShape shape_;
    Q ctx_;
    std::vector<Tableau> basis_;
    std::map<std::vector<int>, std::size_t> index_;
    mutable std::vector<Mat<Q>> gens_;
};

// Rank of rho(P_k) on V_{lambda/mu} with the spanning vector when rank 1.
template <class Q>
struct SymImage {
    long rank = 0;
    std::vector<typename Q::Coeff> spanning; // sum of all v_t when rank 1
};

template <class Q>
long rank_of_mat(const Mat<Q>& m) {
    return rank_of(m.rows());
}

template <class Q>
SymImage<Q> symmetrizer_image(const SkewShape& shape, Q ctx = Q()) {
    SeminormalRep<Q> rep(shape, ctx);
    int k = shape.size();
    Mat<Q> p = rep.parabolic_projector(Blocks(std::vector<int>{k}));
    SymImage<Q> out;
    out.rank = rank_of_mat(p);
    if (out.rank == 1)
        out.spanning.assign(static_cast<std::size_t>(rep.dim()), ctx.from_long(1));
    return out;
}

// Irreducible representation W_{k,lambda} of H_{k,n}(q): the image of
// rho(P_{k,n}) on V_lambda, in the basis w_T indexed by the semistandard
// tableaux of weight (k_1,...,k_n).
template <class Q>
class FusedIrrep {
  public:
    using C = typename Q::Coeff;

    FusedIrrep(Partition lambda, Composition k, int n, Q ctx = Q())
        : lambda_(std::move(lambda)),
          k_(std::move(k)),
          n_(n),
          blocks_(Composition(k_.begin(), k_.begin() + n)),
          rep_(SkewShape(lambda_), ctx) {
        auto sn = s_set(k_, n_);
        require(std::find(sn.begin(), sn.end(), lambda_) != sn.end(),
                "label outside the irreducible set: representation would be zero");
        sstabs_ = enumerate_semistandard(SkewShape(lambda_), blocks_.parts);
        for (std::size_t i = 0; i < sstabs_.size(); ++i)
            ssindex_[sstabs_[i].reading_word()] = i;
        // class of each standard tableau under the blockwise bar map
        bar_.assign(rep_.basis().size(), -1);
        for (std::size_t j = 0; j < rep_.basis().size(); ++j) {
            Tableau b = bar_map(rep_.basis()[j], k_, n_);
            auto it = ssindex_.find(b.reading_word());
            if (it != ssindex_.end() && b.is_semistandard()) bar_[j] = static_cast<long>(it->second);
        }
        proj_ = rep_.parabolic_projector(blocks_);
    }

    int dim() const { return static_cast<int>(sstabs_.size()); }
    const std::vector<Tableau>& basis() const { return sstabs_; }
    const Partition& lambda() const { return lambda_; }
    const SeminormalRep<Q>& ambient() const { return rep_; }

    // w_T as a vector in V_lambda.
    std::vector<C> w_vector(std::size_t tindex) const {
        std::vector<C> v(rep_.basis().size(), rep_.ctx().from_long(0));
        for (std::size_t j = 0; j < bar_.size(); ++j)
            if (bar_[j] == static_cast<long>(tindex)) v[j] = rep_.ctx().from_long(1);
        return v;
    }

    // Matrix of F_w = P sigma_w P on the w_T basis.
    Mat<Q> matrix(const FusedPerm& f) const {
        Perm w = rep_from_matrix(f, blocks_);
        Mat<Q> m(dim(), rep_.ctx().from_long(0));
        for (int T = 0; T < dim(); ++T) {
            std::vector<C> y = proj_.apply(rep_.sigma_apply(w, w_vector(static_cast<std::size_t>(T))));
            // y lies in the span of the w_S: equal coordinates within each
            // bar class, zero outside; assert and read off
            std::vector<bool> seen(static_cast<std::size_t>(dim()), false);
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (bar_[j] < 0) {
                    require(Q::is_zero(y[j]), "image leaves the w_T span");
                } else {
                    std::size_t S = static_cast<std::size_t>(bar_[j]);
                    if (!seen[S]) {
                        m.at(static_cast<int>(S), T) = y[j];
                        seen[S] = true;
                    } else {
                        require(m.at(static_cast<int>(S), T) == y[j],
                                "inconsistent coordinates inside a bar class");
                    }
                }
            }
        }
        return m;
    }

    // Matrix of an arbitrary element.
    Mat<Q> matrix(const FusedElem<Q>& e) const {
        Mat<Q> r(dim(), rep_.ctx().from_long(0));
        for (const auto& [f, c] : e.terms) r = r + matrix(f).scaled(c);
        return r;
    }

    // rho(P Gamma X Gamma^{-1} P) for a Hecke element X: used for fast
    // symbolic vanishing checks without expanding in the standard basis.
    Mat<Q> sandwich(const HeckeElem<Q>& x) const { return proj_ * rep_.rep(x) * proj_; }

    const Mat<Q>& projector() const { return proj_; }

  private:
    Partition lambda_;
    Composition k_;
    int n_;
    Blocks blocks_;
    SeminormalRep<Q> rep_;
    std::vector<Tableau> sstabs_;
    std::map<std::vector<int>, std::size_t> ssindex_;
    std::vector<long> bar_;
    Mat<Q> proj_;
};

// Character comparison of the restriction of W_{k,lambda} to the embedded
// H_{k,n-1}(q) against the direct sum over res_set(lambda).
template <class Q>
bool branching_check(const Partition& lambda, const Composition& k, int n, Q ctx = Q()) {
    require(n >= 1, "branching needs n >= 1");
    FusedIrrep<Q> big(lambda, k, n, ctx);
    if (n == 1) return true; // restriction to H_{k,0} = C
    Blocks small_blocks(Composition(k.begin(), k.begin() + (n - 1)));
    Blocks big_blocks(Composition(k.begin(), k.begin() + n));
    FusedAlg<Q> small(small_blocks, ctx);
    std::vector<FusedIrrep<Q>> parts;
    for (const Partition& mu : res_set(lambda, k, n)) parts.emplace_back(mu, k, n - 1, ctx);
    for (const FusedPerm& f : small.basis()) {
        FusedElem<Q> emb = FusedAlg<Q>::embed(small.basis_elem(f), big_blocks);
        typename Q::Coeff lhs = big.matrix(emb.terms.begin()->first).trace();
        typename Q::Coeff rhs = ctx.from_long(0);
        for (const auto& irr : parts) rhs += irr.matrix(f).trace();
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace fh
