#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusedhecke/util.hpp"

namespace fh {

// Partition: weakly decreasing positive parts, no trailing zeros.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const {
        int s = 0;
        for (int x : parts) s += x;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
    }
    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    std::string str() const;
};

// Canonical total order on partitions of equal size: ascending
// lexicographic on conjugates (equivalently by length, then descending
// lexicographic); fixes the vertex order of the Bratteli diagrams.
bool canonical_less(const Partition& a, const Partition& b);

std::vector<Partition> partitions_of(int n);

using Composition = std::vector<int>;

inline int comp_size(const Composition& c) {
    int s = 0;
    for (int x : c) s += x;
    return s;
}
// Parts reordered decreasingly, zeros dropped.
Partition reorder_to_partition(const Composition& c);

// Node (row, col), 1-based.
struct Node {
    int row = 0, col = 0;
    bool operator<(const Node& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
    bool operator==(const Node& o) const { return row == o.row && col == o.col; }
};

struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in = Partition());

    int size() const { return outer.size() - inner.size(); }
    std::vector<Node> nodes() const; // row-major
    bool has_node(int row, int col) const {
        return col > inner.part(row) && col <= outer.part(row);
    }
    // At most one box in each column: the branching-rule condition.
    bool is_horizontal_strip() const;
    bool operator==(const SkewShape& o) const { return outer == o.outer && inner == o.inner; }
    std::string str() const;
};

struct Tableau {
    SkewShape shape;
    std::map<Node, int> entries;

    Tableau() = default;
    explicit Tableau(SkewShape s) : shape(std::move(s)) {}

    int size() const { return shape.size(); }
    int at(const Node& n) const {
        auto it = entries.find(n);
        require(it != entries.end(), "entry outside the shape");
        return it->second;
    }
    bool is_standard() const;
    bool is_semistandard() const;
    Composition weight() const;
    // Row-major entry sequence; the canonical sort key for tableau lists.
    std::vector<int> reading_word() const;
    // Node holding value v (standard tableaux), and the content c = col-row.
    Node node_of(int v) const;
    int content_of(int v) const {
        Node n = node_of(v);
        return n.col - n.row;
    }
    bool operator==(const Tableau& o) const { return shape == o.shape && entries == o.entries; }
    bool operator<(const Tableau& o) const { return reading_word() < o.reading_word(); }
    std::string str() const;
};

// All standard tableaux of the shape, sorted by reading word.
std::vector<Tableau> enumerate_standard(const SkewShape& shape);

// All semistandard tableaux of the given weight, sorted by reading word.
std::vector<Tableau> enumerate_semistandard(const SkewShape& shape, const Composition& weight);

long kostka(const Partition& lambda, const Composition& weight);
long kostka(const SkewShape& shape, const Composition& weight);

// Dominance: every prefix sum of lambda >= the one of mu (equal sizes).
bool dominance_geq(const Partition& lambda, const Partition& mu);

// Constructive semistandard witness: place the largest letter along the
// bottom of the first mu_n columns, slide right, recurse on the rest.
Tableau slide_witness(const Partition& lambda, const Composition& mu);

// Exchanging i and i+1 in a standard tableau; the result may fail to be
// standard (callers must check).
Tableau apply_transposition(const Tableau& t, int i);

// Irreducible labels of H_{k,n}(q): partitions of k_1+...+k_n dominating
// the reordered weight, in canonical order.
std::vector<Partition> s_set(const Composition& k, int n);

// Branching targets: mu in s_set(k, n-1) with lambda/mu a horizontal strip
// of size k_n.
std::vector<Partition> res_set(const Partition& lambda, const Composition& k, int n);

// Blockwise entry remap 1..k_1 -> 1, k_1+1..k_1+k_2 -> 2, ...
Tableau bar_map(const Tableau& t, const Composition& k, int n);

// Remove the first column of a length-n partition.
Partition phi_column_removal(const Partition& lambda, int n);

} // namespace fh
