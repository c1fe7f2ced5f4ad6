#include "fusedhecke/sworacle.hpp"

#include <algorithm>

namespace fh {

SparseMat SparseMat::identity(long d) {
    SparseMat m(d);
    for (long i = 0; i < d; ++i) m.rows[i].emplace_back(i, Rat(1));
    return m;
}

void SparseMat::set(long r, long c, const Rat& v) {
    if (v != 0) rows[r].emplace_back(c, v);
}

void SparseMat::finish() {
    for (auto& row : rows) std::sort(row.begin(), row.end());
}

Rat SparseMat::at(long r, long c) const {
    for (const auto& [j, v] : rows[r])
        if (j == c) return v;
    return Rat(0);
}

bool SparseMat::is_zero() const {
    for (const auto& row : rows)
        if (!row.empty()) return false;
    return true;
}

bool SparseMat::is_identity() const { return *this == SparseMat::identity(dim); }

Rat SparseMat::trace() const {
    Rat t = 0;
    for (long i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

long SparseMat::nnz() const {
    long c = 0;
    for (const auto& row : rows) c += static_cast<long>(row.size());
    return c;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    require(dim == o.dim, "dimension mismatch");
    SparseMat r(dim);
    std::vector<Rat> acc(static_cast<std::size_t>(dim), Rat(0));
    std::vector<long> touched;
    for (long i = 0; i < dim; ++i) {
        touched.clear();
        for (const auto& [l, x] : rows[i]) {
            for (const auto& [j, y] : o.rows[l]) {
                if (acc[j] == 0 && x * y != 0) touched.push_back(j);
                acc[j] += x * y;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (long j : touched) {
            if (acc[j] != 0) r.rows[i].emplace_back(j, acc[j]);
            acc[j] = 0;
        }
    }
    return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    require(dim == o.dim, "dimension mismatch");
    SparseMat r(dim);
    for (long i = 0; i < dim; ++i) {
        auto a = rows[i].begin(), b = o.rows[i].begin();
        while (a != rows[i].end() || b != o.rows[i].end()) {
            if (b == o.rows[i].end() || (a != rows[i].end() && a->first < b->first)) {
                r.rows[i].push_back(*a++);
            } else if (a == rows[i].end() || b->first < a->first) {
                r.rows[i].push_back(*b++);
            } else {
                Rat v = a->second + b->second;
                if (v != 0) r.rows[i].emplace_back(a->first, v);
                ++a;
                ++b;
            }
        }
    }
    return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const { return *this + o.scaled(Rat(-1)); }

SparseMat SparseMat::scaled(const Rat& c) const {
    SparseMat r(dim);
    if (c == 0) return r;
    for (long i = 0; i < dim; ++i) {
        r.rows[i].reserve(rows[i].size());
        for (const auto& [j, v] : rows[i]) r.rows[i].emplace_back(j, v * c);
    }
    return r;
}

bool SparseMat::operator==(const SparseMat& o) const { return dim == o.dim && rows == o.rows; }

SparseMat rmatrix_action(int N, int m, int i, const Rat& q0) {
    require(N >= 2, "N must be at least 2");
    require(i >= 1 && i < m, "factor index out of range");
    require(q0 != 0 && q0 != 1 && q0 != -1, "q0 must be generic");
    long dim = 1;
    for (int t = 0; t < m; ++t) dim *= N;
    Rat qinv = Rat(q0.get_den(), q0.get_num());
    qinv.canonicalize();
    Rat qmq = q0 - qinv;
    // strides: index = sum (j_t - 1) * N^{m-t}
    long stride_lo = 1;
    for (int t = 0; t < m - i - 1; ++t) stride_lo *= N; // factor i+1
    long stride_hi = stride_lo * N;                     // factor i
    SparseMat r(dim);
    for (long idx = 0; idx < dim; ++idx) {
        int a = static_cast<int>((idx / stride_hi) % N);
        int b = static_cast<int>((idx / stride_lo) % N);
        if (a == b) {
            r.set(idx, idx, q0);
        } else {
            long swapped = idx + (b - a) * stride_hi + (a - b) * stride_lo;
            if (a < b) {
                // column idx contributes to rows: swapped (coeff 1), idx (q - q^{-1})
                r.set(swapped, idx, Rat(1));
                r.set(idx, idx, qmq);
            } else {
                r.set(swapped, idx, Rat(1));
            }
        }
    }
    r.finish();
    return r;
}

TensorRep::TensorRep(int N, int m, Rat q0) : N_(N), m_(m), q0_(std::move(q0)), ctx_(q0_) {
    dim_ = 1;
    for (int t = 0; t < m_; ++t) dim_ *= N_;
    gens_.resize(static_cast<std::size_t>(std::max(0, m_ - 1)));
}

const SparseMat& TensorRep::generator(int i) const {
    auto& slot = gens_[static_cast<std::size_t>(i - 1)];
    if (slot.dim == 0) slot = rmatrix_action(N_, m_, i, q0_);
    return slot;
}

SparseMat TensorRep::sigma(const Perm& w) const {
    SparseMat r = SparseMat::identity(dim_);
    for (int i : reduced_word(w)) r = generator(i) * r;
    return r;
}

SparseMat TensorRep::rep(const HeckeElem<NumericQ>& e) const {
    require(e.m == m_, "element size mismatch");
    SparseMat r(dim_);
    for (const auto& [w, c] : e.terms) r = r + sigma(w).scaled(c);
    return r;
}

SparseMat TensorRep::sym_numerator(int lo, int hi, bool anti) const {
    SparseMat r = SparseMat::identity(dim_);
    Rat qinv = ctx_.qpow(-1);
    Rat x = anti ? Rat(-qinv) : q0_;
    for (int j = 2; j <= hi - lo + 1; ++j) {
        SparseMat f = SparseMat::identity(dim_);
        SparseMat t = SparseMat::identity(dim_);
        Rat xc = 1;
        for (int i = lo + j - 2; i >= lo; --i) {
            t = t * generator(i);
            xc *= x;
            f = f + t.scaled(xc);
        }
        r = r * f;
    }
    return r;
}

SparseMat TensorRep::parabolic_projector(const Blocks& blocks) const {
    require(blocks.total() == m_, "blocks do not sum to the strand count");
    SparseMat r = SparseMat::identity(dim_);
    int pos = 1;
    for (int a = 0; a < blocks.n(); ++a) {
        int k = blocks.parts[a];
        if (k >= 2) {
            Rat denom = ctx_.brace_factorial(k);
            Rat inv = Rat(denom.get_den(), denom.get_num());
            inv.canonicalize();
            r = r * sym_numerator(pos, pos + k - 1, false).scaled(inv);
        }
        pos += k;
    }
    return r;
}

SparseMat TensorRep::rep_fused(const FusedElem<NumericQ>& e) const {
    const Blocks& b = e.blocks;
    require(b.total() == m_, "blocks do not sum to the strand count");
    SparseMat p = parabolic_projector(b);
    SparseMat mid(dim_);
    for (const auto& [f, c] : e.terms) mid = mid + sigma(rep_from_matrix(f, b)).scaled(c);
    return p * mid * p;
}

SparseMat TensorRep::rep_fused(const FusedElem<SymbolicQ>& e) const {
    FusedElem<NumericQ> ev(e.blocks);
    for (const auto& [f, c] : e.terms) ev.add_term(f, c.evaluate(q0_));
    return rep_fused(ev);
}

long centralizer_dim(const Composition& k, int n, int N, const Rat& q0) {
    Blocks blocks{Composition(k.begin(), k.begin() + n)};
    int m = blocks.total();
    TensorRep rep(N, m, q0);
    SparseMat p = rep.parabolic_projector(blocks);
    std::vector<std::vector<Rat>> rows;
    for (const FusedPerm& f : enumerate_fused(blocks)) {
        SparseMat img = p * rep.sigma(rep_from_matrix(f, blocks)) * p;
        std::vector<Rat> v(static_cast<std::size_t>(rep.dim()) * rep.dim(), Rat(0));
        for (long i = 0; i < img.dim; ++i)
            for (const auto& [j, x] : img.rows[i]) v[static_cast<std::size_t>(i) * img.dim + j] = x;
        rows.push_back(std::move(v));
    }
    return rank_of(rows);
}

bool kernel_member(const FusedElem<SymbolicQ>& e, int N, const std::vector<Rat>& q0s) {
    require(!q0s.empty(), "need at least one sample point");
    for (const Rat& q0 : q0s) {
        TensorRep rep(N, e.blocks.total(), q0);
        if (!rep.rep_fused(e).is_zero()) return false;
    }
    return true;
}

} // namespace fh
