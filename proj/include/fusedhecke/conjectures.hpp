#pragma once

#include <string>

#include "fusedhecke/seminormal.hpp"
#include "fusedhecke/sworacle.hpp"

namespace fh {

// Gamma = sigma_{k1}...sigma_2 . sigma_{k1+k2}...sigma_3 ... , each factor
// running through decreasing generator indices; brings the first strand of
// every packet to the front. Requires k weakly decreasing and positive.
Perm gamma_perm(const Composition& k, int n);

template <class Q>
void require_gamma_preconditions(const Composition& k, int n) {
    require(n >= 1 && n <= static_cast<int>(k.size()), "n exceeds the sequence length");
    for (int i = 0; i < n; ++i) {
        require(k[i] >= 1, "weight entries must be positive");
        if (i) require(k[i - 1] >= k[i], "weight must be weakly decreasing");
    }
}

template <class Q>
HeckeElem<Q> gamma_elem(const HeckeAlg<Q>& alg, const Composition& k, int n) {
    require_gamma_preconditions<Q>(k, n);
    return alg.basis(gamma_perm(k, n));
}

template <class Q>
HeckeElem<Q> gamma_inverse_elem(const HeckeAlg<Q>& alg, const Composition& k, int n) {
    require_gamma_preconditions<Q>(k, n);
    return alg.basis_inverse(gamma_perm(k, n));
}

// AS_{k,n}(q) = sum_w (-q^{-1})^{l(w)} P Gamma sigma_w Gamma^{-1} P in the
// standard basis; the sum over w is the antisymmetriser numerator on the
// first n strands.
template <class Q>
FusedElem<Q> as_element(const FusedAlg<Q>& alg, const Composition& k, int n) {
    require_gamma_preconditions<Q>(k, n);
    require(alg.blocks() == Blocks(Composition(k.begin(), k.begin() + n)), "algebra/weight mismatch");
    const HeckeAlg<Q>& h = alg.hecke();
    HeckeElem<Q> core =
        h.mul(gamma_elem(h, k, n), h.mul(h.antisym_numerator(n), gamma_inverse_elem(h, k, n)));
    return alg.collapse_elem(core);
}

// Independent combinatorial construction of AS_{k,n}(1): the permutation
// diagram of w padded with k_a - 1 vertical edges at every ellipse.
FusedElem<ClassicalQ> as_element_classical(const Composition& k, int n);

enum class CheckStatus { verified, failed, skipped };

std::string to_string(CheckStatus s);

struct ConjConfig {
    std::vector<Rat> q_points = {Rat(7, 5), Rat(9, 7), Rat(11, 8)};
    int max_sum_k = 7;             // budget: largest k_1+...+k_{N+1}
    int symbolic_centrality_max = 6;
    int symbolic_ideal_max = 5;
    long tensor_budget = 4096;     // largest N^m for the tensor certificate
};

struct ConjReport {
    Composition k;
    int N = 0;
    CheckStatus centrality = CheckStatus::skipped;
    long ideal_dim_expected = -1;
    long ideal_dim_computed = -1;
    CheckStatus ideal_generation = CheckStatus::failed;
    bool kernel_membership = false;     // exact: AS vanishes in every retained irrep
    bool tensor_kernel_checked = false; // numeric tensor-space certificate also ran
    std::string q_mode;
};

// Conjecture: AS_{k,N+1}(q) is central in H_{k,N+1}(q). Symbolic over Q(q)
// within the symbolic budget, otherwise at every configured sample point.
CheckStatus check_centrality(const Composition& k, int N, const ConjConfig& cfg = ConjConfig());

// Conjecture: AS_{k,N+1}(q) generates the kernel ideal. Certificate:
// exact vanishing of AS in every irrep with l(lambda) <= N (upper bound,
// symbolic seminormal route) plus the echelon rank of {F_u AS F_v}
// reaching dim H_{k-1,N+1}(q) at the sample points (lower bound; also
// symbolically within the symbolic budget).
ConjReport check_ideal_generation(const Composition& k, int N, const ConjConfig& cfg = ConjConfig());

// Both checks combined into one report.
ConjReport check_conjectures(const Composition& k, int N, const ConjConfig& cfg = ConjConfig());

// Every weakly decreasing positive k and every N >= 2 with
// k_1+...+k_{N+1} <= cfg.max_sum_k, in deterministic order.
std::vector<std::pair<Composition, int>> sweep_cases(const ConjConfig& cfg = ConjConfig());
std::vector<ConjReport> sweep_conjectures(const ConjConfig& cfg = ConjConfig());

} // namespace fh
