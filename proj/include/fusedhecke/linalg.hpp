#pragma once

#include <vector>

#include "fusedhecke/intpoly.hpp"
#include "fusedhecke/ratfunc.hpp"

namespace fh {

// Fraction-free (Bareiss) rank of an integer matrix. Pivot choice: the
// nonzero candidate of smallest bit length in the active submatrix,
// ties broken by lowest column then lowest row index.
long rank_bareiss(std::vector<std::vector<Int>> m);

// Bareiss rank over Z[q]; pivot with smallest (degree, leading-coefficient
// bit length), same deterministic tie-breaks.
long rank_bareiss(std::vector<std::vector<IntPoly>> m);

// Rank over Q / Q(q): rows are cleared to a common integral denominator
// first, then eliminated fraction-free.
long rank_of(const std::vector<std::vector<Rat>>& m);
long rank_of(const std::vector<std::vector<RatFunc>>& m);

// Incremental row-echelon basis over a field; insert() reports whether the
// row enlarged the span. Deterministic given the insertion order.
template <class C>
class EchelonBasis {
  public:
    // true iff c is (exactly) zero
    static bool zero(const C& c) { return c == C(0); }

    bool insert(std::vector<C> row) {
        reduce(row);
        std::size_t p = 0;
        while (p < row.size() && zero(row[p])) ++p;
        if (p == row.size()) return false;
        C lead = row[p];
        for (auto& x : row) x = x / lead;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        // keep rows ordered by pivot for deterministic reduction
        for (std::size_t i = rows_.size(); i-- > 1;) {
            if (pivots_[i] < pivots_[i - 1]) {
                std::swap(pivots_[i], pivots_[i - 1]);
                std::swap(rows_[i], rows_[i - 1]);
            } else {
                break;
            }
        }
        return true;
    }

    bool contains(std::vector<C> row) const {
        reduce(row);
        for (const auto& x : row)
            if (!zero(x)) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    void reduce(std::vector<C>& row) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t p = pivots_[i];
            if (p >= row.size() || zero(row[p])) continue;
            C f = row[p];
            for (std::size_t j = p; j < row.size(); ++j) row[j] = row[j] - f * rows_[i][j];
        }
    }

    std::vector<std::vector<C>> rows_;
    std::vector<std::size_t> pivots_;
};

template <>
inline bool EchelonBasis<RatFunc>::zero(const RatFunc& c) {
    return c.is_zero();
}

} // namespace fh
