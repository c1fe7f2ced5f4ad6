#include "fusedhecke/linalg.hpp"

#include <algorithm>

namespace fh {

namespace {

struct PivotPos {
    long row = -1, col = -1;
};

// smaller key wins; key = bit length for integers
PivotPos find_pivot_int(const std::vector<std::vector<Int>>& m, long r0) {
    PivotPos best;
    std::size_t best_key = 0;
    long rows = static_cast<long>(m.size());
    long cols = rows ? static_cast<long>(m[0].size()) : 0;
    for (long j = 0; j < cols; ++j)
        for (long i = r0; i < rows; ++i) {
            if (m[i][j] == 0) continue;
            std::size_t key = mpz_sizeinbase(m[i][j].get_mpz_t(), 2);
            if (best.row < 0 || key < best_key) {
                best = {i, j};
                best_key = key;
            }
        }
    return best;
}

PivotPos find_pivot_poly(const std::vector<std::vector<IntPoly>>& m, long r0) {
    PivotPos best;
    std::pair<long, std::size_t> best_key{0, 0};
    long rows = static_cast<long>(m.size());
    long cols = rows ? static_cast<long>(m[0].size()) : 0;
    for (long j = 0; j < cols; ++j)
        for (long i = r0; i < rows; ++i) {
            if (m[i][j].is_zero()) continue;
            std::pair<long, std::size_t> key{m[i][j].degree(),
                                             mpz_sizeinbase(m[i][j].leading().get_mpz_t(), 2)};
            if (best.row < 0 || key < best_key) {
                best = {i, j};
                best_key = key;
            }
        }
    return best;
}

} // namespace

long rank_bareiss(std::vector<std::vector<Int>> m) {
    long rank = 0;
    Int prev = 1;
    for (;;) {
        PivotPos p = find_pivot_int(m, rank);
        if (p.row < 0) break;
        std::swap(m[rank], m[p.row]);
        for (auto& row : m) std::swap(row[static_cast<std::size_t>(rank)], row[static_cast<std::size_t>(p.col)]);
        // column swap above keeps the pivot at (rank, rank); swapping a
        // column means swapping it with column `rank` in every row
        long n = static_cast<long>(m[0].size());
        const Int piv = m[rank][rank];
        for (long i = rank + 1; i < static_cast<long>(m.size()); ++i) {
            for (long j = rank + 1; j < n; ++j) {
                Int v = piv * m[i][j] - m[i][rank] * m[rank][j];
                m[i][j] = v / prev; // exact by Bareiss
            }
            m[i][rank] = 0;
        }
        prev = piv;
        ++rank;
        if (rank >= static_cast<long>(m.size())) break;
    }
    return rank;
}

long rank_bareiss(std::vector<std::vector<IntPoly>> m) {
    long rank = 0;
    IntPoly prev(1);
    for (;;) {
        PivotPos p = find_pivot_poly(m, rank);
        if (p.row < 0) break;
        std::swap(m[rank], m[p.row]);
        for (auto& row : m) std::swap(row[static_cast<std::size_t>(rank)], row[static_cast<std::size_t>(p.col)]);
        long n = static_cast<long>(m[0].size());
        const IntPoly piv = m[rank][rank];
        for (long i = rank + 1; i < static_cast<long>(m.size()); ++i) {
            for (long j = rank + 1; j < n; ++j) {
                IntPoly v = piv * m[i][j] - m[i][rank] * m[rank][j];
                m[i][j] = v.divide_exact(prev);
            }
            m[i][rank] = IntPoly();
        }
        prev = piv;
        ++rank;
        if (rank >= static_cast<long>(m.size())) break;
    }
    return rank;
}

long rank_of(const std::vector<std::vector<Rat>>& m) {
    std::vector<std::vector<Int>> cleared;
    cleared.reserve(m.size());
    for (const auto& row : m) {
        Int l = 1;
        for (const Rat& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> r;
        r.reserve(row.size());
        for (const Rat& x : row) {
            Rat v = x * Rat(l);
            v.canonicalize();
            r.push_back(v.get_num());
        }
        cleared.push_back(std::move(r));
    }
    return rank_bareiss(std::move(cleared));
}

long rank_of(const std::vector<std::vector<RatFunc>>& m) {
    std::vector<std::vector<IntPoly>> cleared;
    cleared.reserve(m.size());
    for (const auto& row : m) {
        IntPoly l(1);
        for (const RatFunc& x : row) {
            if (x.is_zero()) continue;
            IntPoly g = poly_gcd(l, x.den());
            l = l.divide_exact(g) * x.den();
        }
        std::vector<IntPoly> r;
        r.reserve(row.size());
        for (const RatFunc& x : row) {
            if (x.is_zero()) {
                r.emplace_back();
            } else {
                r.push_back(x.num() * l.divide_exact(x.den()));
            }
        }
        cleared.push_back(std::move(r));
    }
    return rank_bareiss(std::move(cleared));
}

} // namespace fh
