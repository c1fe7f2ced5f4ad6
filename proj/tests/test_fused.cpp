#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusedhecke/fused.hpp"

using namespace fh;

using SF = FusedAlg<SymbolicQ>;
using CF = FusedAlg<ClassicalQ>;

namespace {
RatFunc q() { return RatFunc::q_power(1); }

FusedElem<ClassicalQ> evaluate_at_one(const FusedElem<SymbolicQ>& e) {
    FusedElem<ClassicalQ> r(e.blocks);
    for (const auto& [f, c] : e.terms) r.add_term(f, c.evaluate(1));
    return r;
}
} // namespace

TEST_CASE("classical product: worked example blocks (2,2)") {
    CF alg(Blocks({2, 2}));
    FusedPerm cross = FusedPerm::from_matrix({{1, 1}, {1, 1}});
    auto prod = alg.multiply_classical(alg.basis_elem(cross), alg.basis_elem(cross));
    FusedElem<ClassicalQ> expect(alg.blocks());
    expect.add_term(FusedPerm::from_matrix({{2, 0}, {0, 2}}), Rat(1, 4));
    expect.add_term(cross, Rat(1, 2));
    expect.add_term(FusedPerm::from_matrix({{0, 2}, {2, 0}}), Rat(1, 4));
    CHECK(prod == expect);
}

TEST_CASE("classical product: worked example blocks (2,1,1)") {
    CF alg(Blocks({2, 1, 1}));
    // ({1,3},{1},{2}) . ({1,2},{1},{3}) = 1/2 [ ({1,3},{2},{1}) + ({2,3},{1},{1}) ]
    FusedPerm d1 = FusedPerm::from_matrix({{1, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    FusedPerm d2 = FusedPerm::from_matrix({{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    auto prod = alg.multiply_classical(alg.basis_elem(d1), alg.basis_elem(d2));
    FusedElem<ClassicalQ> expect(alg.blocks());
    expect.add_term(FusedPerm::from_matrix({{1, 0, 1}, {0, 1, 0}, {1, 0, 0}}), Rat(1, 2));
    expect.add_term(FusedPerm::from_matrix({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}), Rat(1, 2));
    CHECK(prod == expect);
}

TEST_CASE("classical product: unit") {
    CF alg(Blocks({2, 1, 1}));
    for (const FusedPerm& f : alg.basis()) {
        CHECK(alg.multiply_classical(alg.one(), alg.basis_elem(f)) == alg.basis_elem(f));
        CHECK(alg.multiply_classical(alg.basis_elem(f), alg.one()) == alg.basis_elem(f));
    }
}

TEST_CASE("q product: worked example blocks (2,2)") {
    SF alg(Blocks({2, 2}));
    FusedPerm id = FusedPerm::from_matrix({{2, 0}, {0, 2}});
    FusedPerm cross = FusedPerm::from_matrix({{1, 1}, {1, 1}});
    FusedPerm dbl = FusedPerm::from_matrix({{0, 2}, {2, 0}});
    auto prod = alg.multiply_q(alg.basis_elem(cross), alg.basis_elem(cross));

    RatFunc den = RatFunc(IntPoly(1) + IntPoly::monomial(1, 2)) *
                  RatFunc(IntPoly(1) + IntPoly::monomial(1, 2)); // (1+q^2)^2
    FusedElem<SymbolicQ> expect(alg.blocks());
    expect.add_term(id, RatFunc(1) / den);
    expect.add_term(cross, (q() - RatFunc::q_power(-1) + 2 * RatFunc::q_power(3)) / den);
    expect.add_term(dbl, RatFunc::q_power(2) / den);
    CHECK(prod == expect);
}

TEST_CASE("q product: unit is the diagonal basis element") {
    for (Blocks b : {Blocks({2, 2}), Blocks({2, 1, 1}), Blocks({3, 1})}) {
        SF alg(b);
        for (const FusedPerm& f : alg.basis()) {
            CHECK(alg.multiply_q(alg.one(), alg.basis_elem(f)) == alg.basis_elem(f));
            CHECK(alg.multiply_q(alg.basis_elem(f), alg.one()) == alg.basis_elem(f));
        }
    }
}

TEST_CASE("q product at q=1 equals classical product") {
    // symbolic route evaluated at 1, and the numeric q=1 instantiation,
    // both against the combinatorial oracle
    for (Blocks b : {Blocks({2, 2}), Blocks({2, 1, 1}), Blocks({1, 2, 1}), Blocks({3, 1})}) {
        SF salg(b);
        CF calg(b);
        for (const FusedPerm& u : salg.basis())
            for (const FusedPerm& v : salg.basis()) {
                auto sym = salg.multiply_q(salg.basis_elem(u), salg.basis_elem(v));
                auto cls = calg.multiply_classical(calg.basis_elem(u), calg.basis_elem(v));
                CHECK(evaluate_at_one(sym) == cls);
                CHECK(calg.multiply_q(calg.basis_elem(u), calg.basis_elem(v)) == cls);
            }
    }
}

TEST_CASE("associativity of the q product") {
    for (Blocks b : {Blocks({2, 2}), Blocks({2, 1, 1})}) {
        SF alg(b);
        const auto& basis = alg.basis();
        for (const FusedPerm& u : basis)
            for (const FusedPerm& v : basis)
                for (const FusedPerm& w : basis) {
                    auto uv = alg.multiply_q(alg.basis_elem(u), alg.basis_elem(v));
                    auto vw = alg.multiply_q(alg.basis_elem(v), alg.basis_elem(w));
                    CHECK(alg.multiply_q(uv, alg.basis_elem(w)) ==
                          alg.multiply_q(alg.basis_elem(u), vw));
                }
    }
}

TEST_CASE("Sigma and T elements, k=2") {
    SF alg(Blocks({2, 2}));
    auto S = alg.sigma_element(1);
    auto T = alg.t_element(1);
    CHECK(S == alg.basis_elem(FusedPerm::from_matrix({{0, 2}, {2, 0}})));
    CHECK(T == alg.basis_elem(FusedPerm::from_matrix({{1, 1}, {1, 1}})));

    RatFunc qmq = q() - RatFunc::q_power(-1);

    // T1 Sigma1 = Sigma1 T1 = (q - q^{-1}) Sigma1 + q^2 T1
    auto lhs1 = alg.multiply_q(T, S);
    auto lhs2 = alg.multiply_q(S, T);
    auto rhs = alg.add(alg.scale(S, qmq), alg.scale(T, RatFunc::q_power(2)));
    CHECK(lhs1 == rhs);
    CHECK(lhs2 == rhs);

    // Sigma1^2 = (q-q^{-1})^2 {2} Sigma1 + (q-q^{-1}) {2}^2 T1 + 1.
    // The T1 coefficient is forced by the order-3 characteristic equation
    // below together with the T/Sigma relation: on the Sigma eigenbasis
    // {q^4, -1, q^{-2}} one has T = (q-q^{-1})Sigma/(Sigma-q^2), and only
    // this coefficient makes the three eigenvalue identities hold.
    auto S2 = alg.multiply_q(S, S);
    RatFunc brace2 = q_number(2, QNumKind::brace);
    auto rhs2 = alg.add(alg.add(alg.scale(S, qmq * qmq * brace2),
                                alg.scale(T, qmq * brace2 * brace2)),
                        alg.one());
    CHECK(S2 == rhs2);

    // characteristic equation of order 3:
    // Sigma^3 - (q^4-1+q^{-2}) Sigma^2 - (q^4-q^2+q^{-2}) Sigma + q^2 = 0
    auto S3 = alg.multiply_q(S2, S);
    RatFunc c2 = RatFunc::q_power(4) - RatFunc(1) + RatFunc::q_power(-2);
    RatFunc c1 = RatFunc::q_power(4) - RatFunc::q_power(2) + RatFunc::q_power(-2);
    auto chi = alg.add(alg.sub(alg.sub(S3, alg.scale(S2, c2)), alg.scale(S, c1)),
                       alg.scale(alg.one(), RatFunc::q_power(2)));
    CHECK(chi.is_zero());
}

TEST_CASE("Sigma characteristic equation, general k") {
    for (int k = 1; k <= 3; ++k) {
        SF alg(Blocks({k, k}));
        auto S = alg.sigma_element(1);
        // prod_{l=0}^{k} (Sigma - (-1)^{k+l} q^{-k+l(l+1)}) = 0
        auto acc = alg.one();
        for (int l = 0; l <= k; ++l) {
            long e = -k + l * (l + 1);
            RatFunc root = RatFunc::q_power(e);
            if ((k + l) % 2 == 1) root = -root;
            acc = alg.sub(alg.multiply_q(acc, S), alg.scale(acc, root));
        }
        CHECK(acc.is_zero());
        // dimension of H_{(k,k),2}(q) is k+1
        CHECK(alg.dimension() == static_cast<std::size_t>(k + 1));
    }
}

TEST_CASE("Sigma braid relation at n=3") {
    for (int k = 1; k <= 3; ++k) {
        SF alg(Blocks({k, k, k}));
        auto S1 = alg.sigma_element(1);
        auto S2 = alg.sigma_element(2);
        auto lhs = alg.multiply_q(alg.multiply_q(S1, S2), S1);
        auto rhs = alg.multiply_q(alg.multiply_q(S2, S1), S2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("embed") {
    SF alg2(Blocks({2, 2}));
    Blocks b3({2, 2, 2});
    SF alg3(b3);

    CHECK(SF::embed(alg2.one(), b3) == alg3.one());

    // embedded Sigma1 equals the n=3 Sigma1; braid check through the embedding
    auto S1e = SF::embed(alg2.sigma_element(1), b3);
    CHECK(S1e == alg3.sigma_element(1));

    // embedding is an algebra morphism on all basis pairs
    for (const FusedPerm& u : alg2.basis())
        for (const FusedPerm& v : alg2.basis()) {
            auto prod2 = alg2.multiply_q(alg2.basis_elem(u), alg2.basis_elem(v));
            auto lhs = SF::embed(prod2, b3);
            auto rhs = alg3.multiply_q(SF::embed(alg2.basis_elem(u), b3),
                                       SF::embed(alg2.basis_elem(v), b3));
            CHECK(lhs == rhs);
        }

    // distinct basis labels stay distinct
    std::set<FusedPerm> images;
    for (const FusedPerm& u : alg2.basis())
        images.insert(SF::embed(alg2.basis_elem(u), b3).terms.begin()->first);
    CHECK(images.size() == alg2.basis().size());
}

TEST_CASE("dimension") {
    CHECK(FusedAlg<SymbolicQ>(Blocks({2, 2, 2})).dimension() == 21);
    CHECK(FusedAlg<SymbolicQ>(Blocks({3, 1, 1, 1})).dimension() == 34);
    for (int k = 1; k <= 4; ++k)
        CHECK(FusedAlg<SymbolicQ>(Blocks({k, k})).dimension() == static_cast<std::size_t>(k + 1));
}
