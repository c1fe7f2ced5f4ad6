#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fusedhecke/util.hpp"

namespace fh {

constexpr int kMaxPermSize = 12;

// Permutation of {1..m} in one-line notation, value type.
struct Perm {
    std::uint8_t m = 0;
    std::array<std::uint8_t, kMaxPermSize> img{}; // img[i] = w(i+1)

    Perm() = default;
    static Perm identity(int m);
    static Perm from_one_line(const std::vector<int>& images);
    static Perm transposition(int m, int i); // s_i, 1 <= i <= m-1

    int size() const { return m; }
    int operator()(int i) const { return img[i - 1]; } // 1-based
    std::vector<int> one_line() const;

    bool operator==(const Perm& o) const {
        if (m != o.m) return false;
        for (int i = 0; i < m; ++i)
            if (img[i] != o.img[i]) return false;
        return true;
    }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { // canonical order: lex on one-line
        if (m != o.m) return m < o.m;
        for (int i = 0; i < m; ++i)
            if (img[i] != o.img[i]) return img[i] < o.img[i];
        return false;
    }
    std::string str() const;
};

Perm compose(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Perm inverse(const Perm& a);
int length(const Perm& a); // inversion count
// Lexicographically smallest reduced word (generator indices, 1-based).
std::vector<int> reduced_word(const Perm& a);
std::vector<Perm> symmetric_group(int m); // all of S_m, lex order

// Composition (k_1,...,k_n) of m = sum k_a with k_a >= 0; induces the
// parabolic block structure on {1..m}.
struct Blocks {
    std::vector<int> parts;

    Blocks() = default;
    explicit Blocks(std::vector<int> p) : parts(std::move(p)) {
        for (int k : parts) require(k >= 0, "negative block size");
    }
    int n() const { return static_cast<int>(parts.size()); }
    int total() const {
        int s = 0;
        for (int k : parts) s += k;
        return s;
    }
    int start(int a) const { // first position of block a (1-based), 1 <= a <= n
        int s = 1;
        for (int b = 0; b < a - 1; ++b) s += parts[b];
        return s;
    }
    int block_of(int pos) const; // block index containing position pos
    bool operator==(const Blocks& o) const { return parts == o.parts; }
    bool operator<(const Blocks& o) const { return parts < o.parts; }
    std::string str() const;
};

// Fused permutation: n x n matrix of multiplicities, row a and column a
// both summing to k_a. Canonical order is row-major lexicographic.
struct FusedPerm {
    std::uint8_t n = 0;
    std::array<std::uint8_t, kMaxPermSize * kMaxPermSize> mat{};

    FusedPerm() = default;
    static FusedPerm from_matrix(const std::vector<std::vector<int>>& rows);
    static FusedPerm identity(const Blocks& blocks);

    int at(int a, int b) const { return mat[(a - 1) * n + (b - 1)]; } // 1-based
    void set(int a, int b, int v) { mat[(a - 1) * n + (b - 1)] = static_cast<std::uint8_t>(v); }
    std::vector<std::vector<int>> matrix() const;
    bool valid_for(const Blocks& blocks) const;

    bool operator==(const FusedPerm& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n * n; ++i)
            if (mat[i] != o.mat[i]) return false;
        return true;
    }
    bool operator!=(const FusedPerm& o) const { return !(*this == o); }
    bool operator<(const FusedPerm& o) const {
        if (n != o.n) return n < o.n;
        for (int i = 0; i < n * n; ++i)
            if (mat[i] != o.mat[i]) return mat[i] < o.mat[i];
        return false;
    }
    std::string str() const;
};

// True iff w and w^{-1} are strictly increasing on every block interval,
// i.e. w is the distinguished representative of its double coset.
bool is_distinguished(const Perm& w, const Blocks& blocks);

// Block multiplicity matrix: entry (a,b) counts positions of block a
// mapped into block b.
FusedPerm matrix_from_perm(const Perm& w, const Blocks& blocks);

// The unique distinguished representative with the given matrix.
Perm rep_from_matrix(const FusedPerm& mat, const Blocks& blocks);

struct CollapseResult {
    Perm w;    // distinguished double coset representative
    int excess; // l(pi) - l(w) >= 0
};

// Projection of pi onto its distinguished double coset representative.
CollapseResult collapse(const Perm& pi, const Blocks& blocks);

// All fused permutations for the given blocks, canonical (row-major
// lexicographic ascending) order.
std::vector<FusedPerm> enumerate_fused(const Blocks& blocks);

} // namespace fh
