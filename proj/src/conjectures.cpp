#include "fusedhecke/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace fh {

Perm gamma_perm(const Composition& k, int n) {
    require_gamma_preconditions<SymbolicQ>(k, n);
    int m = comp_size(Composition(k.begin(), k.begin() + n));
    std::vector<int> word;
    int acc = 0;
    for (int a = 2; a <= n; ++a) {
        acc += k[a - 2];
        for (int i = acc; i >= a; --i) word.push_back(i);
    }
    Perm g = Perm::identity(m);
    for (int i : word) g = compose(Perm::transposition(m, i), g);
    require(length(g) == static_cast<int>(word.size()), "Gamma word is not reduced");
    return g;
}

FusedElem<ClassicalQ> as_element_classical(const Composition& k, int n) {
    require_gamma_preconditions<ClassicalQ>(k, n);
    Blocks blocks{Composition(k.begin(), k.begin() + n)};
    FusedElem<ClassicalQ> out(blocks);
    for (const Perm& w : symmetric_group(n)) {
        FusedPerm f;
        f.n = static_cast<std::uint8_t>(n);
        for (int a = 1; a <= n; ++a) {
            f.set(a, a, k[a - 1] - 1);
            f.set(a, w(a), f.at(a, w(a)) + 1);
        }
        out.add_term(f, length(w) % 2 == 0 ? Rat(1) : Rat(-1));
    }
    return out;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::failed: return "failed";
        default: return "skipped";
    }
}

namespace {

// For all-ones weights the fused algebra is H_n(q) itself and the
// sigma_i generate it, so commuting with the generator labels proves
// centrality on the whole algebra (induction over reduced words).
bool all_ones(const Composition& kn) {
    for (int x : kn)
        if (x != 1) return false;
    return true;
}

template <class Q>
std::vector<FusedPerm> centrality_probe_set(const FusedAlg<Q>& alg) {
    const Composition& kn = alg.blocks().parts;
    if (all_ones(kn)) {
        std::vector<FusedPerm> probes;
        int n = alg.blocks().n();
        for (int i = 1; i < n; ++i)
            probes.push_back(matrix_from_perm(Perm::transposition(n, i), alg.blocks()));
        return probes;
    }
    return alg.basis();
}

template <class Q>
bool centrality_holds(const FusedAlg<Q>& alg, const Composition& k, int n) {
    FusedElem<Q> as = as_element(alg, k, n);
    std::vector<FusedPerm> probes = centrality_probe_set(alg);
    alg.parabolic_projector(); // warm the shared cache before the parallel grid
    std::atomic<bool> ok{true};
    parallel_for(probes.size(), [&](std::size_t i) {
        if (!ok.load()) return;
        FusedElem<Q> b = alg.basis_elem(probes[i]);
        if (!(alg.multiply_q(as, b) == alg.multiply_q(b, as))) ok.store(false);
    });
    return ok.load();
}

long expected_ideal_dim(const Composition& kn, int N) {
    int n = static_cast<int>(kn.size());
    long expected = 0;
    for (const Partition& lam : s_set(kn, n))
        if (lam.length() == N + 1) {
            long kk = kostka(lam, kn);
            expected += kk * kk;
        }
    // cross-check: the ideal is isomorphic to the weight-drop algebra
    Composition drop;
    for (int x : kn) drop.push_back(x - 1);
    require(expected == static_cast<long>(enumerate_fused(Blocks(drop)).size()),
            "ideal dimension disagrees with the weight-drop algebra dimension");
    return expected;
}

// Exact membership of AS in the kernel ideal: AS vanishes in every
// irreducible with l(lambda) <= N, checked symbolically through the
// seminormal matrices.
bool symbolic_kernel_membership(const Composition& kn, int N) {
    int n = static_cast<int>(kn.size());
    Perm g = gamma_perm(kn, n);
    for (const Partition& lam : s_set(kn, n)) {
        if (lam.length() > N) continue;
        FusedIrrep<SymbolicQ> irr(lam, kn, n);
        const SeminormalRep<SymbolicQ>& rep = irr.ambient();
        Mat<SymbolicQ> z = irr.projector() * rep.sigma(g) * rep.sym_numerator(1, n, true) *
                           rep.sigma_inverse(g) * irr.projector();
        if (!z.is_zero()) return false;
    }
    return true;
}

// Echelon rank of {F_u AS F_v} with early stop at the expected dimension.
template <class Q>
long ideal_span_rank(const FusedAlg<Q>& alg, const FusedElem<Q>& as, long expected) {
    const auto& basis = alg.basis();
    EchelonBasis<typename Q::Coeff> ech;
    auto coords = [&](const FusedElem<Q>& e) {
        std::vector<typename Q::Coeff> v(basis.size(), alg.ctx().from_long(0));
        for (const auto& [f, c] : e.terms) v[alg.basis_index(f)] = c;
        return v;
    };
    for (const FusedPerm& u : basis) {
        FusedElem<Q> left = alg.multiply_q(alg.basis_elem(u), as);
        if (left.is_zero()) continue;
        for (const FusedPerm& v : basis) {
            ech.insert(coords(alg.multiply_q(left, alg.basis_elem(v))));
            if (static_cast<long>(ech.rank()) >= expected) return static_cast<long>(ech.rank());
        }
    }
    return static_cast<long>(ech.rank());
}

} // namespace

CheckStatus check_centrality(const Composition& k, int N, const ConjConfig& cfg) {
    int n = N + 1;
    require(n <= static_cast<int>(k.size()), "weight sequence too short");
    Composition kn(k.begin(), k.begin() + n);
    int sum = comp_size(kn);
    if (sum > cfg.max_sum_k) return CheckStatus::skipped;
    if (sum <= cfg.symbolic_centrality_max) {
        FusedAlg<SymbolicQ> alg{Blocks(kn)};
        return centrality_holds(alg, kn, n) ? CheckStatus::verified : CheckStatus::failed;
    }
    require(cfg.q_points.size() >= 3, "evaluated centrality needs at least three points");
    for (const Rat& q0 : cfg.q_points) {
        FusedAlg<NumericQ> alg{Blocks(kn), NumericQ(q0)};
        if (!centrality_holds(alg, kn, n)) return CheckStatus::failed;
    }
    return CheckStatus::verified;
}

ConjReport check_ideal_generation(const Composition& k, int N, const ConjConfig& cfg) {
    int n = N + 1;
    require(n <= static_cast<int>(k.size()), "weight sequence too short");
    Composition kn(k.begin(), k.begin() + n);
    ConjReport rep;
    rep.k = kn;
    rep.N = N;
    int sum = comp_size(kn);
    if (sum > cfg.max_sum_k) {
        rep.ideal_generation = CheckStatus::failed;
        rep.q_mode = "budget exceeded";
        fail("budget exceeded: k_1+...+k_{N+1} = " + std::to_string(sum));
    }
    rep.ideal_dim_expected = expected_ideal_dim(kn, N);

    // exact upper bound / kernel membership
    rep.kernel_membership = symbolic_kernel_membership(kn, N);

    // numeric tensor-space certificate within budget
    long space = 1;
    bool in_budget = true;
    for (int t = 0; t < sum; ++t) {
        space *= N;
        if (space > cfg.tensor_budget) {
            in_budget = false;
            break;
        }
    }
    if (in_budget) {
        FusedAlg<SymbolicQ> salg{Blocks(kn)};
        rep.tensor_kernel_checked = true;
        if (!kernel_member(as_element(salg, kn, n), N, cfg.q_points))
            rep.kernel_membership = false;
    }

    // rank lower bound at the sample points
    long computed = -1;
    require(cfg.q_points.size() >= 2, "need at least two sample points");
    for (std::size_t p = 0; p < 2; ++p) {
        FusedAlg<NumericQ> alg{Blocks(kn), NumericQ(cfg.q_points[p])};
        long r = ideal_span_rank(alg, as_element(alg, kn, n), rep.ideal_dim_expected);
        computed = (computed < 0) ? r : std::min(computed, r);
    }
    rep.q_mode = "evaluated";
    if (sum <= cfg.symbolic_ideal_max) {
        FusedAlg<SymbolicQ> alg{Blocks(kn)};
        long r = ideal_span_rank(alg, as_element(alg, kn, n), rep.ideal_dim_expected);
        computed = std::min(computed, r);
        rep.q_mode = "symbolic";
    }
    rep.ideal_dim_computed = computed;
    rep.ideal_generation =
        (rep.kernel_membership && computed == rep.ideal_dim_expected) ? CheckStatus::verified
                                                                      : CheckStatus::failed;
    return rep;
}

ConjReport check_conjectures(const Composition& k, int N, const ConjConfig& cfg) {
    ConjReport rep = check_ideal_generation(k, N, cfg);
    rep.centrality = check_centrality(k, N, cfg);
    int sum = comp_size(rep.k);
    rep.q_mode = (sum <= cfg.symbolic_centrality_max && sum <= cfg.symbolic_ideal_max)
                     ? "symbolic"
                     : (sum <= cfg.symbolic_centrality_max ? "symbolic centrality, evaluated rank"
                                                           : "evaluated");
    return rep;
}

std::vector<std::pair<Composition, int>> sweep_cases(const ConjConfig& cfg) {
    std::vector<std::pair<Composition, int>> cases;
    for (int N = 2; N + 1 <= cfg.max_sum_k; ++N) {
        int n = N + 1;
        std::vector<Composition> seqs;
        Composition cur;
        std::function<void(int, int, int)> rec = [&](int pos, int maxv, int rem) {
            if (pos == n) {
                seqs.push_back(cur);
                return;
            }
            int slots_left = n - pos;
            for (int v = std::min(maxv, rem - (slots_left - 1)); v >= 1; --v) {
                cur.push_back(v);
                rec(pos + 1, v, rem - v);
                cur.pop_back();
            }
        };
        rec(0, cfg.max_sum_k, cfg.max_sum_k);
        std::sort(seqs.begin(), seqs.end());
        for (const Composition& k : seqs) cases.emplace_back(k, N);
    }
    return cases;
}

std::vector<ConjReport> sweep_conjectures(const ConjConfig& cfg) {
    std::vector<ConjReport> out;
    for (const auto& [k, N] : sweep_cases(cfg)) out.push_back(check_conjectures(k, N, cfg));
    return out;
}

} // namespace fh
