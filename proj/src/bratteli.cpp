#include "fusedhecke/bratteli.hpp"

#include <algorithm>
#include <sstream>

namespace fh {

int BratteliDiagram::find_vertex(int level, const Partition& label) const {
    if (level < 0 || level >= static_cast<int>(levels.size())) return -1;
    const auto& vs = levels[level];
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i].label == label) return static_cast<int>(i);
    return -1;
}

std::vector<long> BratteliDiagram::level_dims(int level) const {
    std::vector<long> out;
    for (const auto& v : levels[level]) out.push_back(v.dim);
    return out;
}

bool BratteliDiagram::dims_consistent() const {
    for (std::size_t n = 0; n < levels.size(); ++n) {
        for (std::size_t i = 0; i < levels[n].size(); ++i) {
            long expect;
            if (n == 0) {
                expect = 1;
            } else {
                expect = 0;
                for (const Edge& e : edges[n - 1])
                    if (e.lower == static_cast<int>(i))
                        expect += static_cast<long>(e.multiplicity) * levels[n - 1][e.upper].dim;
            }
            if (levels[n][i].dim != expect) return false;
        }
    }
    return true;
}

namespace {
int kth(const Composition& k, int n) { // 1-based, extending by the last entry
    require(!k.empty(), "empty weight sequence");
    if (n <= static_cast<int>(k.size())) return k[n - 1];
    return k.back();
}

Composition prefix(const Composition& k, int n) {
    Composition p;
    for (int i = 1; i <= n; ++i) p.push_back(kth(k, i));
    return p;
}
} // namespace

BratteliDiagram build_chain(const Composition& k, int n_max) {
    require(n_max >= 0, "negative depth");
    BratteliDiagram d;
    d.levels.resize(static_cast<std::size_t>(n_max) + 1);
    d.edges.resize(static_cast<std::size_t>(n_max));
    d.levels[0].push_back({Partition(), 1});
    for (int n = 1; n <= n_max; ++n) {
        Composition kn = prefix(k, n);
        std::vector<Partition> labels = s_set(kn, n);
        for (const Partition& lam : labels) {
            long dim = 0;
            for (const Partition& mu : res_set(lam, kn, n)) {
                int j = d.find_vertex(n - 1, mu);
                require(j >= 0, "branching target missing at the previous level");
                d.edges[n - 1].push_back({j, static_cast<int>(d.levels[n].size()), 1});
                dim += d.levels[n - 1][j].dim;
            }
            d.levels[n].push_back({lam, dim});
        }
    }
    return d;
}

std::set<VertexRef> closure(const BratteliDiagram& d, const std::set<VertexRef>& seed) {
    for (const VertexRef& v : seed)
        require(d.find_vertex(v.level, v.label) >= 0, "seed vertex not in the diagram");
    std::set<VertexRef> out = seed;
    for (int n = 0; n + 1 <= d.depth(); ++n) {
        for (const auto& e : d.edges[n]) {
            VertexRef up{n, d.levels[n][e.upper].label};
            if (out.count(up)) out.insert(VertexRef{n + 1, d.levels[n + 1][e.lower].label});
        }
    }
    return out;
}

BratteliDiagram quotient(const BratteliDiagram& d, const std::set<VertexRef>& seed) {
    std::set<VertexRef> removed = closure(d, seed);
    BratteliDiagram q;
    q.levels.resize(d.levels.size());
    q.edges.resize(d.edges.size());
    std::vector<std::vector<int>> remap(d.levels.size());
    for (std::size_t n = 0; n < d.levels.size(); ++n) {
        remap[n].assign(d.levels[n].size(), -1);
        for (std::size_t i = 0; i < d.levels[n].size(); ++i) {
            if (removed.count(VertexRef{static_cast<int>(n), d.levels[n][i].label})) continue;
            remap[n][i] = static_cast<int>(q.levels[n].size());
            q.levels[n].push_back(d.levels[n][i]);
        }
    }
    for (std::size_t n = 0; n < d.edges.size(); ++n)
        for (const auto& e : d.edges[n]) {
            int u = remap[n][e.upper], l = remap[n + 1][e.lower];
            if (u >= 0 && l >= 0) q.edges[n].push_back({u, l, e.multiplicity});
        }
    // dimensions of the quotient restate the quotient branching rules
    for (std::size_t n = 0; n < q.levels.size(); ++n) {
        for (std::size_t i = 0; i < q.levels[n].size(); ++i) {
            if (n == 0) {
                q.levels[n][i].dim = 1;
                continue;
            }
            long dim = 0;
            for (const auto& e : q.edges[n - 1])
                if (e.lower == static_cast<int>(i))
                    dim += static_cast<long>(e.multiplicity) * q.levels[n - 1][e.upper].dim;
            q.levels[n][i].dim = dim;
        }
    }
    return q;
}

std::set<VertexRef> minimal_generators(const BratteliDiagram& d,
                                       const std::set<VertexRef>& removed) {
    // closedness: every lower neighbour of a removed vertex is removed
    for (int n = 0; n + 1 <= d.depth(); ++n)
        for (const auto& e : d.edges[n]) {
            VertexRef up{n, d.levels[n][e.upper].label};
            VertexRef lo{n + 1, d.levels[n + 1][e.lower].label};
            if (removed.count(up)) require(removed.count(lo), "removed set is not path-closed");
        }
    std::set<VertexRef> out;
    for (const VertexRef& v : removed) {
        bool has_removed_parent = false;
        if (v.level > 0) {
            int idx = d.find_vertex(v.level, v.label);
            for (const auto& e : d.edges[v.level - 1])
                if (e.lower == idx &&
                    removed.count(VertexRef{v.level - 1, d.levels[v.level - 1][e.upper].label}))
                    has_removed_parent = true;
        }
        if (!has_removed_parent) out.insert(v);
    }
    return out;
}

std::set<VertexRef> centralizer_removed_set(const Composition& k, int N, int n_max) {
    BratteliDiagram d = build_chain(k, n_max);
    std::set<VertexRef> removed;
    for (int n = 0; n <= n_max; ++n)
        for (const auto& v : d.levels[n])
            if (v.label.length() > N) removed.insert(VertexRef{n, v.label});
    return removed;
}

BratteliDiagram centralizer_diagram(const Composition& k, int N, int n_max) {
    require(N >= 1, "N must be at least 1");
    BratteliDiagram d = build_chain(k, n_max);
    std::set<VertexRef> removed = centralizer_removed_set(k, N, n_max);
    bool decreasing = true;
    for (int i = 1; i < n_max; ++i)
        if (kth(k, i) < kth(k, i + 1)) decreasing = false;
    if (decreasing && !removed.empty()) {
        // for decreasing weights the whole removed set is generated by the
        // level-(N+1) vertices of length N+1
        std::set<VertexRef> seed;
        if (N + 1 <= n_max)
            for (const auto& v : d.levels[N + 1])
                if (v.label.length() == N + 1) seed.insert(VertexRef{N + 1, v.label});
        require(closure(d, seed) == removed,
                "level-(N+1) seed does not generate the removed set");
    }
    return quotient(d, removed);
}

bool removed_set_gives_chain_of_quotients(const BratteliDiagram& d,
                                          const std::set<VertexRef>& removed) {
    // I_n = I_{n+1} cap A_n: v removed iff every lower neighbour is removed
    for (int n = 0; n + 1 <= d.depth(); ++n) {
        for (std::size_t i = 0; i < d.levels[n].size(); ++i) {
            VertexRef v{n, d.levels[n][i].label};
            bool all_lower_removed = true, has_lower = false;
            for (const auto& e : d.edges[n])
                if (e.upper == static_cast<int>(i)) {
                    has_lower = true;
                    if (!removed.count(VertexRef{n + 1, d.levels[n + 1][e.lower].label}))
                        all_lower_removed = false;
                }
            if (!has_lower) continue;
            if (removed.count(v) != all_lower_removed) return false;
        }
    }
    return true;
}

std::string to_dot(const BratteliDiagram& d) {
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t n = 0; n < d.levels.size(); ++n) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < d.levels[n].size(); ++i) os << " v" << n << "_" << i << ";";
        os << " }\n";
        for (std::size_t i = 0; i < d.levels[n].size(); ++i) {
            const auto& v = d.levels[n][i];
            std::string label = v.label.length() ? v.label.str() : "()";
            os << "  v" << n << "_" << i << " [label=\"" << label << " (" << v.dim << ")\"];\n";
        }
    }
    for (std::size_t n = 0; n < d.edges.size(); ++n)
        for (const auto& e : d.edges[n]) {
            os << "  v" << n << "_" << e.upper << " -> v" << n + 1 << "_" << e.lower;
            if (e.multiplicity != 1) os << " [label=\"" << e.multiplicity << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace fh
