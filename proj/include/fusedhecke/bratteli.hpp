#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fusedhecke/shapes.hpp"

namespace fh {

// Leveled multigraph of irreducible labels with dimension annotations.
// Level n holds partitions of k_1+...+k_n; edges join adjacent levels and
// carry a multiplicity (always 1 for the branching rules realized here,
// kept general for quotient bookkeeping).
struct BratteliDiagram {
    struct Vertex {
        Partition label;
        long dim = 0;
    };
    struct Edge {
        int upper = 0; // index into levels[n]
        int lower = 0; // index into levels[n+1]
        int multiplicity = 1;
    };

    std::vector<std::vector<Vertex>> levels;     // levels[0] = { empty partition }
    std::vector<std::vector<Edge>> edges;        // edges[n]: level n -> level n+1

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    long vertex_count() const {
        long c = 0;
        for (const auto& l : levels) c += static_cast<long>(l.size());
        return c;
    }
    long edge_count() const {
        long c = 0;
        for (const auto& e : edges) c += static_cast<long>(e.size());
        return c;
    }
    int find_vertex(int level, const Partition& label) const; // -1 if absent
    std::vector<long> level_dims(int level) const;

    // Recomputes every dimension from the edges (dim of the empty-diagram
    // root is 1) and checks it against the stored annotation.
    bool dims_consistent() const;
};

// A vertex address in a diagram.
struct VertexRef {
    int level = 0;
    Partition label;
    bool operator<(const VertexRef& o) const {
        if (level != o.level) return level < o.level;
        return label.parts < o.label.parts;
    }
    bool operator==(const VertexRef& o) const { return level == o.level && label == o.label; }
};

// Bratteli diagram of the chain H_{k,0} c H_{k,1} c ... c H_{k,n_max}.
// The sequence k extends by repeating its last entry when n_max exceeds
// its length.
BratteliDiagram build_chain(const Composition& k, int n_max);

// Removes the downward-path closure of the seed set and incident edges.
BratteliDiagram quotient(const BratteliDiagram& d, const std::set<VertexRef>& seed);

// Downward-path closure of a seed set.
std::set<VertexRef> closure(const BratteliDiagram& d, const std::set<VertexRef>& seed);

// Minimal elements of a path-closed removed set.
std::set<VertexRef> minimal_generators(const BratteliDiagram& d, const std::set<VertexRef>& removed);

// Quotient of build_chain(k, n_max) by every vertex of length > N; for
// weakly decreasing k the removed set is also checked to equal the
// closure of the level-(N+1) vertices of length N+1.
BratteliDiagram centralizer_diagram(const Composition& k, int N, int n_max);

// The removed set of the centralizer quotient (all labels of length > N).
std::set<VertexRef> centralizer_removed_set(const Composition& k, int N, int n_max);

// Chain-of-quotients well-formedness: I_n = I_{n+1} cap A_n, i.e. a vertex
// is removed iff all of its lower neighbours are removed.
bool removed_set_gives_chain_of_quotients(const BratteliDiagram& d,
                                          const std::set<VertexRef>& removed);

// Deterministic DOT rendering, vertices labeled "lambda (dim)".
std::string to_dot(const BratteliDiagram& d);

} // namespace fh
