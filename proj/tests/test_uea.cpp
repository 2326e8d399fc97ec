#include "doctest.h"
#include "w22/omega.hpp"
#include "w22/uea.hpp"

using namespace w22;

TEST_CASE("straightening swaps one misordered pair via the bracket") {
    // L_1 L_{-1} = L_{-1} L_1 + [L_1, L_{-1}] = L_{-1} L_1 - 2 L_0
    UeaElement u = UeaElement::from_word({Generator::L(1), Generator::L(-1)});
    UeaElement want = UeaElement::from_word({Generator::L(-1), Generator::L(1)}) -
                      UeaElement::from_word({Generator::L(0)}) * Scalar(2);
    CHECK(straighten(u) == want);
}

TEST_CASE("straightening pulls central terms out in front") {
    // L_2 L_{-2} = L_{-2} L_2 - 4 L_0 + 1/2 C
    UeaElement u = UeaElement::from_word({Generator::L(2), Generator::L(-2)});
    UeaElement want = UeaElement::from_word({Generator::L(-2), Generator::L(2)}) -
                      UeaElement::from_word({Generator::L(0)}) * Scalar(4) +
                      UeaElement::from_word({Generator::C()}) * Scalar::fraction(1, 2);
    UeaElement s = straighten(u);
    CHECK(s == want);
    for (const auto& [word, c] : s.terms())
        CHECK(is_pbw_ordered(word));
}

TEST_CASE("already ordered words are fixed points") {
    UeaElement u = UeaElement::from_word({Generator::C(), Generator::W(-1), Generator::L(2)});
    CHECK(straighten(u) == u);
    CHECK(is_pbw_ordered({Generator::W(1), Generator::L(1)}));
    CHECK_FALSE(is_pbw_ordered({Generator::L(1), Generator::W(1)}));
    CHECK_FALSE(is_pbw_ordered({Generator::L(1), Generator::C()}));
}

TEST_CASE("straightened length-3 word acts identically to the original") {
    UeaElement u = UeaElement::from_word(
        {Generator::L(2), Generator::W(-1), Generator::L(-1)});
    UeaElement s = straighten(u);
    for (const auto& [word, c] : s.terms())
        CHECK(is_pbw_ordered(word));

    OmegaParams p(Scalar(2), Scalar(1), UniPoly::monomial(Scalar(1), 2));
    Omega3Module mod(p);
    MultiPoly v = mod.monomial(1, 1);
    CHECK(apply(s, v, mod) == apply(u, v, mod));
}

TEST_CASE("concatenation is the enveloping product") {
    UeaElement a = UeaElement::from_word({Generator::L(1)});
    UeaElement b = UeaElement::from_word({Generator::W(-2), Generator::L(0)});
    CHECK(a * b == UeaElement::from_word({Generator::L(1), Generator::W(-2), Generator::L(0)}));
}

TEST_CASE("the quadratic element is built from W_0 and W_{-1} W_1") {
    UeaElement q = q_element(Scalar(2));
    UeaElement want = (UeaElement::from_word({Generator::W(0), Generator::W(0)}) -
                       UeaElement::from_word({Generator::W(-1), Generator::W(1)})) *
                      Scalar::fraction(1, 4);
    CHECK(q == want);
    CHECK_THROWS_AS(q_element(Scalar(0)), std::domain_error);
}

TEST_CASE("apply composes rightmost-first") {
    // On the rank-one module with lambda = 2, alpha = 1:
    //   L_0 s^p = s^{p+1}, L_1 1 = 2(s - 1).
    Omega2Module mod(Scalar(2), Scalar(1));
    UeaElement u = UeaElement::from_word({Generator::L(1), Generator::L(0)});
    // L_1 (L_0 1) = L_1 s = 2 (s-1)(s-1) = 2 s^2 - 4 s + 2
    MultiPoly got = apply(u, mod.one(), mod);
    RingPtr ring = mod.ring();
    MultiPoly want = MultiPoly::monomial(ring, {2}, Scalar(2)) +
                     MultiPoly::monomial(ring, {1}, Scalar(-4)) +
                     MultiPoly::monomial(ring, {0}, Scalar(2));
    CHECK(got == want);
}
