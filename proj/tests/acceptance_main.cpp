// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fusedhecke/conjectures.hpp"
#include "fusedhecke/golden.hpp"
#include "fusedhecke/json_io.hpp"

using namespace fh;

namespace {

struct Gate {
    int failures = 0;
    void run(int index, const std::string& what, double budget_s,
             const std::function<bool(std::string&)>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = dt < budget_s;
        bool pass = ok && in_budget;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << what << "  ["
                  << dt << " s / budget " << budget_s << " s]";
        if (!note.empty()) std::cout << "  -- " << note;
        if (!in_budget) std::cout << "  -- budget exceeded";
        std::cout << "\n" << std::flush;
        if (!pass) ++failures;
    }
};

RatFunc q() { return RatFunc::q_power(1); }
RatFunc qp(long e) { return RatFunc::q_power(e); }

// weakly positive compositions (ordered) of every total in [1, max_sum]
std::vector<Composition> all_compositions_up_to(int max_sum) {
    std::vector<Composition> out;
    for (int total = 1; total <= max_sum; ++total) {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int rem) {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            for (int v = 1; v <= rem; ++v) {
                cur.push_back(v);
                rec(rem - v);
                cur.pop_back();
            }
        };
        rec(total);
    }
    return out;
}

bool all_ones(const Composition& k) {
    for (int x : k)
        if (x != 1) return false;
    return true;
}

bool criterion1(std::string& note) {
    bool ok = enumerate_fused(Blocks({2, 1, 1})).size() == 7 &&
              enumerate_fused(Blocks({2, 2})).size() == 3 &&
              enumerate_fused(Blocks({2, 2, 2})).size() == 21;
    note = "counts 7 / 3 / 21";
    return ok;
}

bool criterion2(std::string&) {
    FusedAlg<ClassicalQ> calg(Blocks({2, 2}));
    FusedPerm cross = FusedPerm::from_matrix({{1, 1}, {1, 1}});
    FusedPerm id = FusedPerm::from_matrix({{2, 0}, {0, 2}});
    FusedPerm dbl = FusedPerm::from_matrix({{0, 2}, {2, 0}});
    auto cprod = calg.multiply_classical(calg.basis_elem(cross), calg.basis_elem(cross));
    FusedElem<ClassicalQ> cexpect(calg.blocks());
    cexpect.add_term(id, Rat(1, 4));
    cexpect.add_term(cross, Rat(1, 2));
    cexpect.add_term(dbl, Rat(1, 4));
    if (!(cprod == cexpect)) return false;

    FusedAlg<SymbolicQ> alg(Blocks({2, 2}));
    auto prod = alg.multiply_q(alg.basis_elem(cross), alg.basis_elem(cross));
    RatFunc den = RatFunc(IntPoly(1) + IntPoly::monomial(1, 2));
    den = den * den;
    FusedElem<SymbolicQ> expect(alg.blocks());
    expect.add_term(id, RatFunc(1) / den);
    expect.add_term(cross, (q() - qp(-1) + 2 * qp(3)) / den);
    expect.add_term(dbl, qp(2) / den);
    return prod == expect;
}

bool criterion3(std::string& note) {
    long pairs = 0;
    for (const Composition& k : all_compositions_up_to(6)) {
        Blocks b(k);
        FusedAlg<ClassicalQ> alg{b};
        const auto& basis = alg.basis();
        std::vector<FusedElem<ClassicalQ>> belems;
        belems.reserve(basis.size());
        for (const FusedPerm& f : basis) belems.push_back(alg.basis_elem(f));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (!(alg.multiply_classical(belems[i], belems[j]) ==
                      alg.multiply_q(belems[i], belems[j])))
                    return false;
                ++pairs;
            }
    }
    // symbolic product evaluated at q = 1 agrees too, for the small sizes
    for (const Composition& k : all_compositions_up_to(4)) {
        Blocks b(k);
        FusedAlg<SymbolicQ> salg{b};
        FusedAlg<ClassicalQ> calg{b};
        for (const FusedPerm& u : salg.basis())
            for (const FusedPerm& v : salg.basis()) {
                auto sym = salg.multiply_q(salg.basis_elem(u), salg.basis_elem(v));
                FusedElem<ClassicalQ> ev(b);
                for (const auto& [f, c] : sym.terms) ev.add_term(f, c.evaluate(1));
                if (!(ev == calg.multiply_classical(calg.basis_elem(u), calg.basis_elem(v))))
                    return false;
            }
    }
    std::ostringstream os;
    os << pairs << " basis pairs over every composition with total <= 6";
    note = os.str();
    return true;
}

bool criterion4(std::string&) {
    // order-(k+1) characteristic equation in H_{(k,k),2}(q), k = 1,2,3
    for (int k = 1; k <= 3; ++k) {
        FusedAlg<SymbolicQ> alg(Blocks({k, k}));
        auto S = alg.sigma_element(1);
        auto acc = alg.one();
        for (int l = 0; l <= k; ++l) {
            RatFunc root = qp(-k + l * (l + 1));
            if ((k + l) % 2 == 1) root = -root;
            acc = alg.sub(alg.multiply_q(acc, S), alg.scale(acc, root));
        }
        if (!acc.is_zero()) return false;
    }
    // T/Sigma relation (weight 2, where it is stated)
    {
        FusedAlg<SymbolicQ> alg(Blocks({2, 2}));
        auto S = alg.sigma_element(1), T = alg.t_element(1);
        auto rhs = alg.add(alg.scale(S, q() - qp(-1)), alg.scale(T, qp(2)));
        if (!(alg.multiply_q(T, S) == rhs) || !(alg.multiply_q(S, T) == rhs)) return false;
    }
    // braid relation at three blocks, k = 1,2,3
    for (int k = 1; k <= 3; ++k) {
        FusedAlg<SymbolicQ> alg(Blocks({k, k, k}));
        auto S1 = alg.sigma_element(1), S2 = alg.sigma_element(2);
        if (!(alg.multiply_q(alg.multiply_q(S1, S2), S1) ==
              alg.multiply_q(alg.multiply_q(S2, S1), S2)))
            return false;
    }
    return true;
}

// Direct basis-pair morphism grid over one coefficient context.
template <class Q>
bool morphism_grid(const Composition& k, const std::vector<FusedPerm>& rights, Q ctx,
                   long& pair_checks) {
    int n = static_cast<int>(k.size());
    Blocks b(k);
    FusedAlg<Q> alg{b, ctx};
    std::vector<FusedIrrep<Q>> irreps;
    for (const Partition& lam : s_set(k, n)) irreps.emplace_back(lam, k, n, ctx);
    std::vector<std::map<FusedPerm, Mat<Q>>> mats(irreps.size());
    for (std::size_t r = 0; r < irreps.size(); ++r)
        for (const FusedPerm& f : alg.basis()) mats[r].emplace(f, irreps[r].matrix(f));
    for (const FusedPerm& u : alg.basis())
        for (const FusedPerm& v : rights) {
            auto prod = alg.multiply_q(alg.basis_elem(u), alg.basis_elem(v));
            ++pair_checks;
            for (std::size_t r = 0; r < irreps.size(); ++r) {
                Mat<Q> lhs = mats[r].at(u) * mats[r].at(v);
                Mat<Q> rhs(irreps[r].dim(), ctx.from_long(0));
                for (const auto& [f, c] : prod.terms) rhs = rhs + mats[r].at(f).scaled(c);
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

bool criterion5(std::string& note) {
    // (a) defining relations in every seminormal representation,
    // |lambda| <= 6, symbolically. By the universal property of the
    // presented algebra (reduced-word independence is Matsumoto's
    // theorem), this makes every rho_lambda an algebra morphism on
    // H_m(q).
    for (int m = 2; m <= 6; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            SeminormalRep<SymbolicQ> rep{SkewShape(lam)};
            std::vector<Mat<SymbolicQ>> g;
            for (int i = 1; i < m; ++i) g.push_back(rep.generator(i));
            Mat<SymbolicQ> id = Mat<SymbolicQ>::identity(rep.dim(), SymbolicQ());
            RatFunc qmq = q() - qp(-1);
            for (int i = 0; i < m - 1; ++i) {
                if (!(g[i] * g[i] == g[i].scaled(qmq) + id)) return false;
                if (i + 1 < m - 1 && !(g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1]))
                    return false;
                for (int j = i + 2; j < m - 1; ++j)
                    if (!(g[i] * g[j] == g[j] * g[i])) return false;
            }
        }
    }
    // (b) symmetriser image rank dichotomy on every skew shape of size <= 5
    for (int outer = 1; outer <= 5; ++outer)
        for (const Partition& lam : partitions_of(outer))
            for (int inner = 0; inner < outer; ++inner)
                for (const Partition& mu : partitions_of(inner)) {
                    if (!lam.contains(mu)) continue;
                    SkewShape sh(lam, mu);
                    if (symmetrizer_image(sh, SymbolicQ()).rank !=
                        (sh.is_horizontal_strip() ? 1 : 0))
                        return false;
                }
    // (c) fused irreducibles for every composition with total <= 6:
    // completeness (sum of squared dimensions), the exact structural
    // certificate of the morphism property, and a direct basis-pair grid.
    //
    // The structural certificate closes the morphism identity for every
    // pair in every composition: with (a) established, it remains that
    // the structure constants produced by the q-multiplication equal the
    // compressed products, which follows from P^2 = P, the absorption
    // sigma_i P = P sigma_i = q P on block generators, and the collapse
    // identity P sigma_pi P = q^{l(pi)-l(w)} P sigma_w P for every pi —
    // all verified symbolically below. The grids then exercise the same
    // identity end-to-end: symbolically for the small bases, at an exact
    // generic rational point for the large ones, and on all
    // (basis, generator) pairs for the all-ones weights (complete by
    // induction over reduced words).
    long pair_checks = 0;
    for (const Composition& k : all_compositions_up_to(6)) {
        int n = static_cast<int>(k.size());
        int m = comp_size(k);
        Blocks b(k);
        FusedAlg<SymbolicQ> alg{b};

        long dimsum = 0;
        std::vector<FusedIrrep<SymbolicQ>> irreps;
        for (const Partition& lam : s_set(k, n)) {
            irreps.emplace_back(lam, k, n);
            long d = irreps.back().dim();
            dimsum += d * d;
        }
        if (dimsum != static_cast<long>(alg.dimension())) return false;

        // structural certificate
        const auto& h = alg.hecke();
        const auto& P = alg.parabolic_projector();
        if (!(h.mul(P, P) == P)) return false;
        int pos = 1;
        for (int a = 0; a < b.n(); ++a) {
            for (int i = pos; i < pos + b.parts[a] - 1; ++i) {
                if (!(h.mul_gen(P, i, Side::left) == h.scale(P, q()))) return false;
                if (!(h.mul_gen(P, i, Side::right) == h.scale(P, q()))) return false;
            }
            pos += b.parts[a];
        }
        for (const Perm& pi : symmetric_group(m)) {
            auto cr = collapse(pi, b);
            auto lhs = h.mul(h.mul(P, h.basis(pi)), P);
            auto rhs = h.scale(h.mul(h.mul(P, h.basis(cr.w)), P), qp(cr.excess));
            if (!(lhs == rhs)) return false;
        }

        // direct grid
        if (all_ones(k)) {
            std::vector<FusedPerm> gens;
            for (int i = 1; i < n; ++i)
                gens.push_back(matrix_from_perm(Perm::transposition(n, i), b));
            if (n <= 5) {
                if (!morphism_grid(k, gens, SymbolicQ(), pair_checks)) return false;
            } else {
                if (!morphism_grid(k, gens, NumericQ(Rat(7, 5)), pair_checks)) return false;
            }
        } else if (alg.dimension() <= 25) {
            if (!morphism_grid(k, alg.basis(), SymbolicQ(), pair_checks)) return false;
        } else {
            if (!morphism_grid(k, alg.basis(), NumericQ(Rat(7, 5)), pair_checks)) return false;
        }
    }
    std::ostringstream os;
    os << pair_checks << " direct morphism pair checks plus the structural certificate";
    note = os.str();
    return true;
}

bool criterion6(std::string&) {
    // the three published diagrams: vertex sets, edges, dimension labels
    {
        BratteliDiagram d = build_chain({1}, 5);
        if (!d.dims_consistent()) return false;
        std::vector<std::vector<std::pair<std::vector<int>, long>>> expect = {
            {{{}, 1}},
            {{{1}, 1}},
            {{{2}, 1}, {{1, 1}, 1}},
            {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}},
            {{{4}, 1}, {{3, 1}, 3}, {{2, 2}, 2}, {{2, 1, 1}, 3}, {{1, 1, 1, 1}, 1}},
            {{{5}, 1},
             {{4, 1}, 4},
             {{3, 2}, 5},
             {{2, 2, 1}, 5},
             {{3, 1, 1}, 6},
             {{2, 1, 1, 1}, 4},
             {{1, 1, 1, 1, 1}, 1}}};
        for (int n = 0; n <= 5; ++n) {
            if (d.levels[n].size() != expect[n].size()) return false;
            for (const auto& [parts, dim] : expect[n]) {
                int idx = d.find_vertex(n, Partition(parts));
                if (idx < 0 || d.levels[n][idx].dim != dim) return false;
            }
        }
        // edges are inclusions of partitions (single box added)
        for (int n = 0; n < 5; ++n)
            for (const auto& e : d.edges[n]) {
                const Partition& up = d.levels[n][e.upper].label;
                const Partition& lo = d.levels[n + 1][e.lower].label;
                if (!lo.contains(up) || lo.size() != up.size() + 1) return false;
            }
    }
    {
        BratteliDiagram d = build_chain({2}, 3);
        if (!d.dims_consistent()) return false;
        if (d.level_dims(3) != std::vector<long>({1, 2, 3, 1, 1, 2, 1})) return false;
        int i22 = d.find_vertex(2, Partition({2, 2}));
        int i33 = d.find_vertex(3, Partition({3, 3}));
        for (const auto& e : d.edges[2])
            if (e.upper == i22 && e.lower == i33) return false;
    }
    {
        BratteliDiagram d = build_chain({3, 1}, 4);
        if (!d.dims_consistent()) return false;
        if (d.level_dims(4) != std::vector<long>({1, 3, 3, 1, 3, 2, 1})) return false;
    }
    // Temperley-Lieb quotient of the constant-weight-1 diagram
    {
        BratteliDiagram tl = quotient(build_chain({1}, 6), {VertexRef{3, Partition({1, 1, 1})}});
        std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132};
        for (int n = 0; n <= 6; ++n) {
            long s = 0;
            for (long x : tl.level_dims(n)) s += x * x;
            if (s != catalan[n]) return false;
        }
    }
    // weight-drop minimal generating sets
    for (int k = 1; k <= 2; ++k) {
        BratteliDiagram d = build_chain({k}, 4);
        std::set<VertexRef> seed;
        for (int n = 1; n <= 4; ++n)
            for (const auto& v : d.levels[n])
                if (v.label.length() < n) seed.insert(VertexRef{n, v.label});
        auto mins = minimal_generators(d, seed);
        if (k == 1 && mins != std::set<VertexRef>({VertexRef{2, Partition({2})}})) return false;
        if (k == 2 && mins != std::set<VertexRef>({VertexRef{2, Partition({4})},
                                                   VertexRef{3, Partition({3, 3})}}))
            return false;
    }
    // centraliser quotients: for decreasing weights the removed set is
    // generated at level N+1 (asserted inside centralizer_diagram), and
    // its minimal generating set sits entirely at level N+1
    {
        std::vector<Composition> ks = {{1, 1, 1, 1, 1}, {2, 2, 2, 2}, {2, 2, 1, 1},
                                       {3, 2, 1, 1},    {2, 1, 1, 1}, {4, 1, 1, 1}};
        for (const Composition& k : ks) {
            for (int N = 1; N <= 3; ++N) {
                int n_max = N + 2;
                Composition kn;
                for (int i = 0; i < n_max; ++i)
                    kn.push_back(i < static_cast<int>(k.size()) ? k[i] : k.back());
                if (comp_size(kn) > 8) continue;
                bool decreasing = true;
                for (std::size_t i = 1; i < kn.size(); ++i)
                    if (kn[i - 1] < kn[i]) decreasing = false;
                if (!decreasing) continue;
                BratteliDiagram d = build_chain(kn, n_max);
                auto removed = centralizer_removed_set(kn, N, n_max);
                centralizer_diagram(kn, N, n_max); // internal closure assertion
                if (!removed.empty()) {
                    for (const auto& v : minimal_generators(d, removed))
                        if (v.level != N + 1) return false;
                }
            }
        }
    }
    return true;
}

bool criterion7(std::string&) {
    const Rat p1(7, 5), p2(9, 7);
    struct Case {
        Composition k;
        int n, N;
        long expect;
    };
    std::vector<Case> cases = {{{1, 1, 1}, 3, 2, 5},
                               {{2, 2, 2}, 3, 2, 15},
                               {{1, 1, 1, 1}, 4, 3, 23},
                               {{3, 1}, 2, 2, 2},
                               {{2, 2}, 2, 2, 3}};
    for (const auto& c : cases) {
        // cross-check the frozen value against the Kostka-sum formula
        Composition kn(c.k.begin(), c.k.begin() + c.n);
        long formula = 0;
        for (const Partition& lam : s_set(c.k, c.n)) {
            if (lam.length() > c.N) continue;
            long kk = kostka(lam, kn);
            formula += kk * kk;
        }
        if (formula != c.expect) return false;
        if (centralizer_dim(c.k, c.n, c.N, p1) != c.expect) return false;
        if (centralizer_dim(c.k, c.n, c.N, p2) != c.expect) return false;
    }
    for (int N : {2, 3}) {
        TensorRep rep(N, N + 1, p1);
        HeckeAlg<NumericQ> alg(N + 1, NumericQ(p1));
        if (!rep.rep(alg.antisymmetrizer()).is_zero()) return false;
    }
    return true;
}

bool criterion8(std::string& note) {
    ConjConfig cfg;
    auto reports = sweep_conjectures(cfg);
    if (reports.size() != 25) return false;
    for (const auto& rep : reports) {
        if (rep.centrality != CheckStatus::verified) return false;
        if (rep.ideal_generation != CheckStatus::verified) return false;
        if (!rep.kernel_membership) return false;
        if (rep.ideal_dim_computed != rep.ideal_dim_expected) return false;
    }
    note = "25 cases, all verified";
    return true;
}

bool criterion9(std::string&) {
    std::ostringstream sink;
    return run_golden(sink) == 0;
}

} // namespace

int main() {
    Gate gate;
    gate.run(1, "enumeration counts", 1.0, criterion1);
    gate.run(2, "worked classical and q products", 1.0, criterion2);
    gate.run(3, "classical product = q product at q=1, every composition <= 6", 120.0, criterion3);
    gate.run(4, "Sigma relations: characteristic equation, T/Sigma, braid", 30.0, criterion4);
    gate.run(5, "representation suite", 600.0, criterion5);
    gate.run(6, "branching diagram fixtures and quotients", 60.0, criterion6);
    gate.run(7, "tensor-space ranks", 300.0, criterion7);
    gate.run(8, "conjecture sweep over k_1+...+k_{N+1} <= 7", 3600.0, criterion8);
    gate.run(9, "golden fixture suite exit semantics", 120.0, criterion9);
    if (gate.failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << gate.failures << " criterion(s) FAILED\n";
    return 1;
}
