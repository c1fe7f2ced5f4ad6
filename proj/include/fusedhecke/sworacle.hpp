#pragma once

#include "fusedhecke/fused.hpp"
#include "fusedhecke/linalg.hpp"
#include "fusedhecke/shapes.hpp"

namespace fh {

// Sparse rational matrix, row-major; rows hold sorted (col, value) pairs
// with no explicit zeros.
struct SparseMat {
    long dim = 0;
    std::vector<std::vector<std::pair<long, Rat>>> rows;

    explicit SparseMat(long d = 0) : dim(d), rows(static_cast<std::size_t>(d)) {}
    static SparseMat identity(long d);

    void set(long r, long c, const Rat& v); // build-time insert, unsorted ok
    void finish();                          // sort rows, drop zeros
    Rat at(long r, long c) const;
    bool is_zero() const;
    bool is_identity() const;
    Rat trace() const;
    long nnz() const;

    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat scaled(const Rat& c) const;
    bool operator==(const SparseMat& o) const;
};

// Action of Id x ... x R x ... x Id on (Q^N)^{x m}, factors i, i+1, with the
// standard Hecke R-matrix evaluated at q0. Basis ordered lexicographically
// by index tuples, first factor most significant.
SparseMat rmatrix_action(int N, int m, int i, const Rat& q0);

// Evaluated representation matrices on (Q^N)^{x m}.
class TensorRep {
  public:
    TensorRep(int N, int m, Rat q0);

    int N() const { return N_; }
    int strands() const { return m_; }
    long dim() const { return dim_; }
    const Rat& q0() const { return q0_; }

    const SparseMat& generator(int i) const; // R_{i,i+1}
    SparseMat sigma(const Perm& w) const;
    SparseMat rep(const HeckeElem<NumericQ>& e) const;
    // Antisymmetriser / symmetriser numerator on positions lo..hi through
    // the telescoping factorization.
    SparseMat sym_numerator(int lo, int hi, bool anti) const;
    SparseMat parabolic_projector(const Blocks& blocks) const;
    // rho(P x P) for the lift of a fused element (sum over its terms).
    SparseMat rep_fused(const FusedElem<NumericQ>& e) const;
    SparseMat rep_fused(const FusedElem<SymbolicQ>& e) const;

  private:
    int N_, m_;
    long dim_;
    Rat q0_;
    NumericQ ctx_;
    mutable std::vector<SparseMat> gens_;
};

// Dimension of the image of H_{k,n}(q0) on the symmetrised tensor space:
// the rank of the span of the vectorized images of the standard basis.
long centralizer_dim(const Composition& k, int n, int N, const Rat& q0);

// True iff the element acts as zero on (Q^N)^{x m} at every sample point.
// A generic-point certificate, not a symbolic proof.
bool kernel_member(const FusedElem<SymbolicQ>& e, int N, const std::vector<Rat>& q0s);

} // namespace fh
