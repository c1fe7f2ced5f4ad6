#include "fusedhecke/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fh {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] > 0, "partition parts must be positive");
        if (i) require(parts[i - 1] >= parts[i], "partition parts must decrease weakly");
    }
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 1; col <= part(1); ++col) {
        int h = 0;
        for (int r = 1; r <= length(); ++r)
            if (part(r) >= col) ++h;
        c.push_back(h);
    }
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
    return a.conjugate().parts < b.conjugate().parts;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return canonical_less(a, b); });
    return out;
}

Partition reorder_to_partition(const Composition& c) {
    std::vector<int> v = c;
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    require(outer.contains(inner), "inner shape not contained in outer");
}

std::vector<Node> SkewShape::nodes() const {
    std::vector<Node> ns;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) ns.push_back(Node{r, c});
    return ns;
}

bool SkewShape::is_horizontal_strip() const {
    for (int r = 2; r <= outer.length(); ++r) {
        // rows r-1 and r share a column iff outer_r > inner_{r-1}
        if (outer.part(r) > inner.part(r - 1)) return false;
    }
    return true;
}

std::string SkewShape::str() const {
    return inner.length() ? outer.str() + "/" + inner.str() : outer.str();
}

bool Tableau::is_standard() const {
    auto ns = shape.nodes();
    if (entries.size() != ns.size()) return false;
    std::vector<bool> seen(ns.size() + 1, false);
    for (const Node& n : ns) {
        auto it = entries.find(n);
        if (it == entries.end()) return false;
        int v = it->second;
        if (v < 1 || v > static_cast<int>(ns.size()) || seen[v]) return false;
        seen[v] = true;
    }
    for (const Node& n : ns) {
        if (shape.has_node(n.row, n.col + 1) && at(n) >= at({n.row, n.col + 1})) return false;
        if (shape.has_node(n.row + 1, n.col) && at(n) >= at({n.row + 1, n.col})) return false;
    }
    return true;
}

bool Tableau::is_semistandard() const {
    auto ns = shape.nodes();
    if (entries.size() != ns.size()) return false;
    for (const Node& n : ns) {
        auto it = entries.find(n);
        if (it == entries.end() || it->second < 1) return false;
    }
    for (const Node& n : ns) {
        if (shape.has_node(n.row, n.col + 1) && at(n) > at({n.row, n.col + 1})) return false;
        if (shape.has_node(n.row + 1, n.col) && at(n) >= at({n.row + 1, n.col})) return false;
    }
    return true;
}

Composition Tableau::weight() const {
    Composition w;
    for (const auto& [n, v] : entries) {
        if (static_cast<int>(w.size()) < v) w.resize(v, 0);
        ++w[v - 1];
    }
    return w;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> out;
    for (const Node& n : shape.nodes()) out.push_back(at(n));
    return out;
}

Node Tableau::node_of(int v) const {
    for (const auto& [n, x] : entries)
        if (x == v) return n;
    fail("value not present in tableau");
}

std::string Tableau::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 1; r <= shape.outer.length(); ++r) {
        if (r > 1) os << ",";
        os << "[";
        bool first = true;
        for (int c = 1; c <= shape.outer.part(r); ++c) {
            if (!first) os << ",";
            first = false;
            if (c <= shape.inner.part(r))
                os << "null";
            else
                os << at({r, c});
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Tableau> enumerate_standard(const SkewShape& shape) {
    int n = shape.size();
    std::vector<Tableau> out;
    Tableau cur(shape);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(cur);
            return;
        }
        for (const Node& node : shape.nodes()) {
            if (cur.entries.count(node)) continue;
            // placing v at node keeps partial standardness iff the left and
            // upper neighbours inside the shape are already filled
            if (shape.has_node(node.row, node.col - 1) && !cur.entries.count({node.row, node.col - 1}))
                continue;
            if (shape.has_node(node.row - 1, node.col) && !cur.entries.count({node.row - 1, node.col}))
                continue;
            cur.entries[node] = v;
            rec(v + 1);
            cur.entries.erase(node);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> enumerate_semistandard(const SkewShape& shape, const Composition& weight) {
    require(shape.size() == comp_size(weight), "shape and weight sizes differ");
    std::vector<Node> ns = shape.nodes();
    std::vector<Tableau> out;
    Tableau cur(shape);
    Composition rem = weight;
    // fill row-major; weak rows, strict columns
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == ns.size()) {
            out.push_back(cur);
            return;
        }
        const Node& node = ns[idx];
        int lo = 1;
        if (shape.has_node(node.row, node.col - 1)) lo = std::max(lo, cur.at({node.row, node.col - 1}));
        if (shape.has_node(node.row - 1, node.col)) lo = std::max(lo, cur.at({node.row - 1, node.col}) + 1);
        for (int v = lo; v <= static_cast<int>(rem.size()); ++v) {
            if (rem[v - 1] == 0) continue;
            --rem[v - 1];
            cur.entries[node] = v;
            rec(idx + 1);
            cur.entries.erase(node);
            ++rem[v - 1];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

long kostka(const Partition& lambda, const Composition& weight) {
    return kostka(SkewShape(lambda), weight);
}

long kostka(const SkewShape& shape, const Composition& weight) {
    return static_cast<long>(enumerate_semistandard(shape, weight).size());
}

bool dominance_geq(const Partition& lambda, const Partition& mu) {
    require(lambda.size() == mu.size(), "dominance needs equal sizes");
    int n = std::max(lambda.length(), mu.length());
    int sl = 0, sm = 0;
    for (int i = 1; i <= n; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

Tableau slide_witness(const Partition& lambda, const Composition& mu) {
    require(lambda.size() == comp_size(mu), "size mismatch");
    require(dominance_geq(lambda, reorder_to_partition(mu)),
            "no semistandard witness: dominance fails");
    int n = static_cast<int>(mu.size());
    if (n == 0) return Tableau(SkewShape(lambda));
    if (n == 1) {
        Tableau t{SkewShape(lambda)};
        for (const Node& nd : t.shape.nodes()) t.entries[nd] = 1;
        return t;
    }
    int last = mu[n - 1];
    Partition conj = lambda.conjugate();
    // bottom box of columns 1..last gets letter n; sliding right-justifies
    // the letters within each row
    std::vector<int> tcount(lambda.length() + 1, 0);
    for (int col = 1; col <= last; ++col) {
        require(col <= conj.length(), "dominance guarantees enough columns");
        ++tcount[conj.part(col)];
    }
    std::vector<int> rest(lambda.parts);
    for (int r = 1; r <= lambda.length(); ++r) rest[r - 1] -= tcount[r];
    Partition tilde(std::move(rest));
    Composition nu(mu.begin(), mu.end() - 1);
    Tableau inner = slide_witness(tilde, nu);
    Tableau t{SkewShape(lambda)};
    t.entries = inner.entries;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = lambda.part(r) - tcount[r] + 1; c <= lambda.part(r); ++c)
            t.entries[Node{r, c}] = n;
    return t;
}

Tableau apply_transposition(const Tableau& t, int i) {
    Tableau r = t;
    Node ni = t.node_of(i), nj = t.node_of(i + 1);
    r.entries[ni] = i + 1;
    r.entries[nj] = i;
    return r;
}

std::vector<Partition> s_set(const Composition& k, int n) {
    require(n >= 0 && n <= static_cast<int>(k.size()), "n exceeds the sequence length");
    Composition kn(k.begin(), k.begin() + n);
    Partition kord = reorder_to_partition(kn);
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(comp_size(kn)))
        if (dominance_geq(lam, kord)) out.push_back(lam);
    return out;
}

std::vector<Partition> res_set(const Partition& lambda, const Composition& k, int n) {
    require(n >= 1, "res_set needs n >= 1");
    auto sn = s_set(k, n);
    require(std::find(sn.begin(), sn.end(), lambda) != sn.end(),
            "lambda is not a label at this level");
    std::vector<Partition> out;
    for (const Partition& mu : s_set(k, n - 1)) {
        if (!lambda.contains(mu)) continue;
        SkewShape strip(lambda, mu);
        if (strip.size() == k[n - 1] && strip.is_horizontal_strip()) out.push_back(mu);
    }
    return out;
}

Tableau bar_map(const Tableau& t, const Composition& k, int n) {
    require(t.size() == comp_size(Composition(k.begin(), k.begin() + n)), "size mismatch");
    Tableau r(t.shape);
    for (const auto& [node, v] : t.entries) {
        int acc = 0, lbl = 0;
        for (int a = 0; a < n; ++a) {
            acc += k[a];
            if (v <= acc) {
                lbl = a + 1;
                break;
            }
        }
        require(lbl >= 1, "entry exceeds the block range");
        r.entries[node] = lbl;
    }
    return r;
}

Partition phi_column_removal(const Partition& lambda, int n) {
    require(lambda.length() == n, "partition length must equal n");
    std::vector<int> p;
    for (int x : lambda.parts)
        if (x > 1) p.push_back(x - 1);
    return Partition(std::move(p));
}

} // namespace fh
