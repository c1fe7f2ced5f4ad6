#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusedhecke/ratfunc.hpp"

using namespace fh;

namespace {
RatFunc q() { return RatFunc::q_power(1); }
}

TEST_CASE("field arithmetic normalizes") {
    // q + 1/q = (q^2+1)/q
    RatFunc s = q() + RatFunc::q_power(-1);
    CHECK(s.str() == "(q^2+1)/q");
    CHECK(s.num() == IntPoly::monomial(1, 2) + IntPoly(1));
    CHECK(s.den() == IntPoly::monomial(1, 1));

    // (q^2-1)/(q-1) reduces to q+1
    RatFunc red(IntPoly::monomial(1, 2) - IntPoly(1), IntPoly::monomial(1, 1) - IntPoly(1));
    CHECK(red == RatFunc(IntPoly::monomial(1, 1) + IntPoly(1)));
    CHECK(red.str() == "q+1");

    RatFunc a(IntPoly(1) + IntPoly::monomial(1, 2));
    CHECK((a * (RatFunc(1) / a)).is_one());

    CHECK_THROWS(RatFunc(1) / RatFunc(0));
}

TEST_CASE("normalization is representation independent") {
    // build (2q^2+2)/(2q) and compare against q + 1/q
    RatFunc messy(IntPoly::monomial(2, 2) + IntPoly(2), IntPoly::monomial(2, 1));
    CHECK(messy == q() + RatFunc::q_power(-1));
    // content coprimality: 1/(2q) keeps the 2 in the denominator
    RatFunc half(IntPoly(1), IntPoly::monomial(2, 1));
    CHECK(half.den() == IntPoly::monomial(2, 1));
    // sign normalization: denominator leading coefficient positive
    RatFunc neg(IntPoly(1), IntPoly(-2));
    CHECK(neg.den() == IntPoly(2));
    CHECK(neg.num() == IntPoly(-1));
}

TEST_CASE("q-numbers") {
    CHECK(q_number(2, QNumKind::bracket).str() == "(q^2+1)/q");
    CHECK(q_number(-1, QNumKind::bracket) == RatFunc(-1));
    CHECK(q_number(3, QNumKind::brace) ==
          RatFunc(IntPoly::monomial(1, 4) + IntPoly::monomial(1, 2) + IntPoly(1)));
    CHECK(q_number(0, QNumKind::bracket).is_zero());
    CHECK(q_number(1, QNumKind::bracket).is_one());
    // sign of L
    CHECK(q_number(-2, QNumKind::bracket) == -q_number(2, QNumKind::bracket));
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0, QNumKind::brace).is_one());
    CHECK(q_factorial(2, QNumKind::brace) == RatFunc(IntPoly::monomial(1, 2) + IntPoly(1)));
    // {3}! = (1+q^2)(1+q^2+q^4), checked at q=1 against 3!
    RatFunc f3 = q_factorial(3, QNumKind::brace);
    CHECK(f3 == q_number(2, QNumKind::brace) * q_number(3, QNumKind::brace));
    CHECK(f3.evaluate(1) == 6);
}

TEST_CASE("evaluation") {
    CHECK(RatFunc(IntPoly(1) + IntPoly::monomial(1, 2)).evaluate(1) == 2);
    CHECK(q_number(3, QNumKind::bracket).evaluate(1) == 3);
    CHECK(q_factorial(3, QNumKind::brace).evaluate(2) == 105);
    // pole detection
    RatFunc f(IntPoly(1), IntPoly::monomial(1, 1) - IntPoly(2));
    CHECK_THROWS(f.evaluate(2));
}

TEST_CASE("evaluate is a ring homomorphism at non-poles") {
    std::vector<RatFunc> sample = {
        q(), RatFunc::q_power(-2), q_number(3, QNumKind::bracket), q_number(2, QNumKind::brace),
        RatFunc(IntPoly::monomial(3, 2) - IntPoly(5), IntPoly::monomial(1, 1) + IntPoly(7))};
    Rat pts[] = {Rat(7, 5), Rat(9, 7), Rat(-3, 2)};
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const Rat& p : pts) {
                CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
                CHECK((a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p));
            }
}

TEST_CASE("bracket and brace are related by a power of q") {
    for (long L = 1; L <= 6; ++L) {
        CHECK(q_number(L, QNumKind::bracket) ==
              RatFunc::q_power(1 - L) * q_number(L, QNumKind::brace));
    }
}
