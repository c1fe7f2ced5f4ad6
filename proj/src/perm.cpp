#include "fusedhecke/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fh {

Perm Perm::identity(int m) {
    require(m >= 0 && m <= kMaxPermSize, "permutation size out of range");
    Perm p;
    p.m = static_cast<std::uint8_t>(m);
    for (int i = 0; i < m; ++i) p.img[i] = static_cast<std::uint8_t>(i + 1);
    return p;
}

Perm Perm::from_one_line(const std::vector<int>& images) {
    int m = static_cast<int>(images.size());
    Perm p = identity(m);
    std::vector<bool> seen(m + 1, false);
    for (int i = 0; i < m; ++i) {
        int v = images[i];
        require(v >= 1 && v <= m && !seen[v], "not a permutation in one-line notation");
        seen[v] = true;
        p.img[i] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Perm Perm::transposition(int m, int i) {
    require(i >= 1 && i < m, "generator index out of range");
    Perm p = identity(m);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

std::vector<int> Perm::one_line() const {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = img[i];
    return v;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m; ++i) os << (i ? "," : "") << int(img[i]);
    os << "]";
    return os.str();
}

Perm compose(const Perm& a, const Perm& b) {
    require(a.m == b.m, "permutation size mismatch");
    Perm r;
    r.m = a.m;
    for (int i = 0; i < a.m; ++i) r.img[i] = a.img[b.img[i] - 1];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r;
    r.m = a.m;
    for (int i = 0; i < a.m; ++i) r.img[a.img[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
}

int length(const Perm& a) {
    int inv = 0;
    for (int i = 0; i < a.m; ++i)
        for (int j = i + 1; j < a.m; ++j)
            if (a.img[i] > a.img[j]) ++inv;
    return inv;
}

std::vector<int> reduced_word(const Perm& a) {
    // Greedy over left descents: the smallest i with w^{-1}(i) > w^{-1}(i+1)
    // can start a reduced word, and recursing on s_i w keeps the word
    // lexicographically smallest.
    std::vector<int> word;
    Perm w = a;
    for (;;) {
        Perm wi = inverse(w);
        int best = 0;
        for (int i = 1; i < w.m; ++i) {
            if (wi.img[i - 1] > wi.img[i]) {
                best = i;
                break;
            }
        }
        if (best == 0) break;
        word.push_back(best);
        w = compose(Perm::transposition(w.m, best), w);
    }
    return word;
}

std::vector<Perm> symmetric_group(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int Blocks::block_of(int pos) const {
    int s = 0;
    for (int a = 0; a < n(); ++a) {
        s += parts[a]; // empty blocks never capture a position
        if (pos <= s) return a + 1;
    }
    fail("position outside blocks");
}

std::string Blocks::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

FusedPerm FusedPerm::from_matrix(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    require(n <= kMaxPermSize, "fused permutation size out of range");
    FusedPerm f;
    f.n = static_cast<std::uint8_t>(n);
    for (int a = 1; a <= n; ++a) {
        require(static_cast<int>(rows[a - 1].size()) == n, "matrix is not square");
        for (int b = 1; b <= n; ++b) {
            require(rows[a - 1][b - 1] >= 0, "negative multiplicity");
            f.set(a, b, rows[a - 1][b - 1]);
        }
    }
    return f;
}

FusedPerm FusedPerm::identity(const Blocks& blocks) {
    FusedPerm f;
    f.n = static_cast<std::uint8_t>(blocks.n());
    for (int a = 1; a <= blocks.n(); ++a) f.set(a, a, blocks.parts[a - 1]);
    return f;
}

std::vector<std::vector<int>> FusedPerm::matrix() const {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) rows[a - 1][b - 1] = at(a, b);
    return rows;
}

bool FusedPerm::valid_for(const Blocks& blocks) const {
    if (n != blocks.n()) return false;
    for (int a = 1; a <= n; ++a) {
        int rs = 0, cs = 0;
        for (int b = 1; b <= n; ++b) {
            rs += at(a, b);
            cs += at(b, a);
        }
        if (rs != blocks.parts[a - 1] || cs != blocks.parts[a - 1]) return false;
    }
    return true;
}

std::string FusedPerm::str() const {
    std::ostringstream os;
    os << "[";
    for (int a = 1; a <= n; ++a) {
        os << (a > 1 ? ",[" : "[");
        for (int b = 1; b <= n; ++b) os << (b > 1 ? "," : "") << at(a, b);
        os << "]";
    }
    os << "]";
    return os.str();
}

bool is_distinguished(const Perm& w, const Blocks& blocks) {
    require(w.size() == blocks.total(), "permutation/blocks size mismatch");
    Perm wi = inverse(w);
    for (const Perm* p : std::initializer_list<const Perm*>{&w, &wi}) {
        int pos = 1;
        for (int a = 0; a < blocks.n(); ++a) {
            for (int j = 1; j < blocks.parts[a]; ++j) {
                if ((*p)(pos + j - 1) >= (*p)(pos + j)) return false;
            }
            pos += blocks.parts[a];
        }
    }
    return true;
}

FusedPerm matrix_from_perm(const Perm& w, const Blocks& blocks) {
    require(w.size() == blocks.total(), "permutation/blocks size mismatch");
    FusedPerm f;
    f.n = static_cast<std::uint8_t>(blocks.n());
    int pos = 1;
    for (int a = 1; a <= blocks.n(); ++a) {
        for (int j = 0; j < blocks.parts[a - 1]; ++j) {
            int target = w(pos + j);
            // locate target block
            int s = 0, b = 0;
            for (int bb = 0; bb < blocks.n(); ++bb) {
                s += blocks.parts[bb];
                if (target <= s) {
                    b = bb + 1;
                    break;
                }
            }
            f.set(a, b, f.at(a, b) + 1);
        }
        pos += blocks.parts[a - 1];
    }
    return f;
}

Perm rep_from_matrix(const FusedPerm& mat, const Blocks& blocks) {
    require(mat.valid_for(blocks), "matrix violates row/column sums");
    int n = blocks.n(), m = blocks.total();
    // next free position inside each codomain block
    std::vector<int> next(n);
    for (int b = 0; b < n; ++b) next[b] = blocks.start(b + 1);
    Perm w = Perm::identity(m);
    for (int a = 1; a <= n; ++a) {
        int pos = blocks.start(a);
        // within domain block a, targets listed ascending: consume codomain
        // blocks in increasing order, positions in ascending order
        for (int b = 1; b <= n; ++b) {
            for (int c = 0; c < mat.at(a, b); ++c) {
                w.img[pos - 1] = static_cast<std::uint8_t>(next[b - 1]);
                ++next[b - 1];
                ++pos;
            }
        }
    }
    return w;
}

CollapseResult collapse(const Perm& pi, const Blocks& blocks) {
    Perm w = rep_from_matrix(matrix_from_perm(pi, blocks), blocks);
    return CollapseResult{w, length(pi) - length(w)};
}

namespace {
void enumerate_rows(const Blocks& blocks, int a, std::vector<int>& colrem, FusedPerm& cur,
                    std::vector<FusedPerm>& out) {
    int n = blocks.n();
    if (a > n) {
        out.push_back(cur);
        return;
    }
    // fill row a left to right; ascending entry choices give row-major
    // lexicographic ascending output order
    std::vector<int> row(n, 0);
    std::function<void(int, int)> rec = [&](int b, int rem) {
        if (b == n) {
            if (rem != 0) return;
            for (int j = 0; j < n; ++j) {
                cur.set(a, j + 1, row[j]);
                colrem[j] -= row[j];
            }
            enumerate_rows(blocks, a + 1, colrem, cur, out);
            for (int j = 0; j < n; ++j) colrem[j] += row[j];
            return;
        }
        int hi = std::min(rem, colrem[b]);
        for (int v = 0; v <= hi; ++v) {
            row[b] = v;
            rec(b + 1, rem - v);
        }
        row[b] = 0;
    };
    rec(0, blocks.parts[a - 1]);
}
} // namespace

std::vector<FusedPerm> enumerate_fused(const Blocks& blocks) {
    require(blocks.n() <= kMaxPermSize, "too many blocks");
    std::vector<FusedPerm> out;
    std::vector<int> colrem = blocks.parts;
    FusedPerm cur;
    cur.n = static_cast<std::uint8_t>(blocks.n());
    enumerate_rows(blocks, 1, colrem, cur, out);
    return out;
}

} // namespace fh
