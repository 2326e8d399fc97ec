#include "doctest.h"
#include "w22/omega.hpp"

using namespace w22;

namespace {
UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Scalar> cs;
    for (long c : coeffs)
        cs.emplace_back(c);
    return UniPoly::from_coeffs(cs);
}
} // namespace

TEST_CASE("parameter derivation splits h at alpha") {
    // h = t^2 at alpha = 1: g = t + 1, h(alpha) = 1
    OmegaParams p(Scalar(2), Scalar(1), upoly({0, 0, 1}));
    CHECK(p.g == upoly({1, 1}));
    CHECK(p.h_alpha == Scalar(1));
    CHECK_THROWS_AS(OmegaParams(Scalar(0), Scalar(1), upoly({1})), std::domain_error);
}

TEST_CASE("rank-one action matches the closed form") {
    Omega2Module mod(Scalar(2), Scalar(1));
    RingPtr ring = mod.ring();
    auto mono = [&](std::int64_t p, long c) {
        return MultiPoly::monomial(ring, {p}, Scalar(c));
    };

    // L_2 s = 4 (s - 2)(s - 2) = 4 s^2 - 16 s + 16
    CHECK(mod.act(Generator::L(2), mod.monomial(1)) ==
          mono(2, 4) + mono(1, -16) + mono(0, 16));
    // L_0 s^2 = s^3: the action shifts degree, so no L_0 eigenvectors
    CHECK(mod.act(Generator::L(0), mod.monomial(2)) == mod.monomial(3));
    // negative index reaches down with an inverse lambda power
    CHECK(mod.act(Generator::L(-1), mod.one()) ==
          (mono(1, 1) + mono(0, 1)) * Scalar::fraction(1, 2));
    // W and C act as zero
    CHECK(mod.act(Generator::W(3), mod.monomial(2)).is_zero());
    CHECK(mod.act(Generator::C(), mod.one()).is_zero());
}

TEST_CASE("rank-two action matches the closed form through F and G") {
    // lambda = 2, alpha = 1, h = t^2: g = t + 1, h(alpha) = 1
    OmegaParams p(Scalar(2), Scalar(1), upoly({0, 0, 1}));
    Omega3Module mod(p);
    RingPtr ring = mod.ring();
    auto mono = [&](std::int64_t a, std::int64_t b, long c) {
        return MultiPoly::monomial(ring, {a, b}, Scalar(c));
    };

    // F(1) = g = t + 1, G(1) = t F(1) + h(alpha) = t^2 + t + 1
    CHECK(f_map(p, UniPoly(Scalar(1))) == upoly({1, 1}));
    CHECK(g_map(p, UniPoly(Scalar(1))) == upoly({1, 1, 1}));
    // F(t) = g t - 1 = t^2 + t - 1
    CHECK(f_map(p, UniPoly::variable()) == upoly({-1, 1, 1}));

    // W_1 1 = 2 (t - 1)
    CHECK(mod.act(Generator::W(1), mod.one()) == mono(0, 1, 2) + mono(0, 0, -2));
    // L_1 1 = 2 (s + G(1) - F(1)) = 2 (s + t^2)
    CHECK(mod.act(Generator::L(1), mod.one()) == mono(1, 0, 2) + mono(0, 2, 2));
    // W_0 (s t) = s t^2
    CHECK(mod.act(Generator::W(0), mod.monomial(1, 1)) == mono(1, 2, 1));
    // L_0 (s t) = s^2 t: again degree grows, a non-weight action
    CHECK(mod.act(Generator::L(0), mod.monomial(1, 1)) == mono(2, 1, 1));
    // W_{-1} 1 = (1/2)(t + 1)
    CHECK(mod.act(Generator::W(-1), mod.one()) ==
          (mono(0, 1, 1) + mono(0, 0, 1)) * Scalar::fraction(1, 2));
    // C acts as zero
    CHECK(mod.act(Generator::C(), mod.monomial(2, 2)).is_zero());
}

TEST_CASE("the action is linear over sums of monomials") {
    OmegaParams p(Scalar::fraction(1, 2), Scalar(-2), upoly({0, -2, 0, 1}));
    Omega3Module mod(p);
    MultiPoly sum = mod.monomial(1, 0) + mod.monomial(0, 1) * Scalar(3);
    CHECK(mod.act(Generator::L(2), sum) ==
          mod.act(Generator::L(2), mod.monomial(1, 0)) +
              mod.act(Generator::L(2), mod.monomial(0, 1)) * Scalar(3));
}

TEST_CASE("intertwiner space between equal modules with alpha nonzero") {
    OmegaParams p(Scalar(2), Scalar(1), upoly({0, 0, 1}));
    std::vector<MultiPoly> basis = hom_space(p, p, 4, 6);
    REQUIRE(basis.size() == 1);
    CHECK(hom_dimension_classified(p, p) == 1);

    // The basis element is a constant, and multiplication by it intertwines.
    REQUIRE(basis[0].terms().size() == 1);
    CHECK(basis[0].terms().begin()->first == Exponents{0, 0});

    Omega3Module src(p, basis[0].ring());
    for (std::int64_t n : {-2, 0, 1, 3})
        for (const Generator& x : {Generator::L(n), Generator::W(n)}) {
            MultiPoly u = src.monomial(1, 2);
            CHECK(src.act(x, basis[0] * u) == basis[0] * src.act(x, u));
        }
}

TEST_CASE("intertwiner space with alpha zero is spanned by a power of t") {
    OmegaParams src(Scalar(2), Scalar(0), upoly({0, 0, 1}));      // h = t^2
    OmegaParams tgt(Scalar(2), Scalar(0), upoly({1, 0, 1}));      // h = t^2 + 1
    std::vector<MultiPoly> basis = hom_space(src, tgt, 4, 6);
    REQUIRE(basis.size() == 1);
    CHECK(hom_dimension_classified(src, tgt) == 1);
    REQUIRE(basis[0].terms().size() == 1);
    CHECK(basis[0].terms().begin()->first == Exponents{0, 1}); // t^1

    // Multiplication by the basis really intertwines the two actions.
    Omega3Module a(src, basis[0].ring());
    Omega3Module b(tgt, basis[0].ring());
    for (std::int64_t n : {-1, 1, 2})
        for (const Generator& x : {Generator::L(n), Generator::W(n)}) {
            MultiPoly u = a.monomial(2, 1);
            CHECK(b.act(x, basis[0] * u) == basis[0] * a.act(x, u));
        }
}

TEST_CASE("mismatched parameters leave no intertwiners") {
    OmegaParams a(Scalar(2), Scalar(1), upoly({0, 0, 1}));
    OmegaParams b(Scalar(3), Scalar(1), upoly({0, 0, 1}));
    OmegaParams c(Scalar(2), Scalar::fraction(1, 2), upoly({0, 0, 1}));
    OmegaParams d(Scalar(2), Scalar(0), upoly({0, 0, 1}));
    OmegaParams e(Scalar(2), Scalar(0), upoly({1, 0, 1}));
    CHECK(hom_space(a, b, 4, 6).empty());
    CHECK(hom_space(a, c, 4, 6).empty());
    CHECK(hom_space(e, d, 4, 6).empty()); // h drops by 1 with alpha = 0
    CHECK(hom_dimension_classified(a, b) == 0);
    CHECK(hom_dimension_classified(a, c) == 0);
    CHECK(hom_dimension_classified(e, d) == 0);
}
