#include "doctest.h"
#include "w22/algebra.hpp"

using namespace w22;

TEST_CASE("bracket of Virasoro generators, including the central charge") {
    // [L_2, L_{-2}] = -4 L_0 + (8-2)/12 C = -4 L_0 + 1/2 C
    LieElement b = bracket(Generator::L(2), Generator::L(-2));
    LieElement want = LieElement(Generator::L(0)) * Scalar(-4) +
                      LieElement(Generator::C()) * Scalar::fraction(1, 2);
    CHECK(b == want);

    // [L_1, L_{-1}] = -2 L_0 with no central term
    CHECK(bracket(Generator::L(1), Generator::L(-1)) ==
          LieElement(Generator::L(0)) * Scalar(-2));

    // [L_3, L_2] = (2-3) L_5 = -L_5
    CHECK(bracket(Generator::L(3), Generator::L(2)) == LieElement(Generator::L(5)) * Scalar(-1));
}

TEST_CASE("bracket mixing L and W mirrors the Virasoro relation") {
    // [L_2, W_3] = (3-2) W_5 = W_5
    CHECK(bracket(Generator::L(2), Generator::W(3)) == LieElement(Generator::W(5)));
    // [L_3, W_{-3}] = -6 W_0 + (27-3)/12 C = -6 W_0 + 2 C
    LieElement want = LieElement(Generator::W(0)) * Scalar(-6) +
                      LieElement(Generator::C()) * Scalar(2);
    CHECK(bracket(Generator::L(3), Generator::W(-3)) == want);
    // [W_m, L_n] = -[L_n, W_m]
    CHECK(bracket(Generator::W(-3), Generator::L(3)) ==
          bracket(Generator::L(3), Generator::W(-3)) * Scalar(-1));
}

TEST_CASE("W commutes with W and C is central") {
    CHECK(bracket(Generator::W(2), Generator::W(-2)).is_zero());
    CHECK(bracket(Generator::C(), Generator::L(5)).is_zero());
    CHECK(bracket(Generator::W(1), Generator::C()).is_zero());
}

TEST_CASE("generators carry a grade and a total order") {
    CHECK(Generator::L(3).grade() == 3);
    CHECK(Generator::W(-2).grade() == -2);
    CHECK(Generator::C().is_central());
    // C sorts first, then by index, W before L at equal index
    CHECK(Generator::C() < Generator::W(-5));
    CHECK(Generator::W(2) < Generator::L(2));
    CHECK(Generator::L(1) < Generator::W(2));
}

TEST_CASE("bilinear bracket distributes over sums") {
    LieElement x = LieElement(Generator::L(1)) + LieElement(Generator::W(2)) * Scalar(3);
    LieElement y = LieElement(Generator::L(-1));
    LieElement want = bracket(Generator::L(1), Generator::L(-1)) +
                      bracket(Generator::W(2), Generator::L(-1)) * Scalar(3);
    CHECK(bracket(x, y) == want);
}
