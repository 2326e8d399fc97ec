#include "doctest.h"
#include "w22/scalar.hpp"

using w22::Scalar;

TEST_CASE("fractions reduce and normalize sign") {
    CHECK(Scalar::fraction(4, 6) == Scalar::fraction(2, 3));
    CHECK(Scalar::fraction(1, -2) == Scalar::fraction(-1, 2));
    CHECK(Scalar::fraction(0, 7) == Scalar(0));
    CHECK(Scalar::fraction(-3, -3) == Scalar(1));
}

TEST_CASE("gaussian arithmetic is exact") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    Scalar a = Scalar(2) + Scalar(3) * i; // 2 + 3i
    Scalar b = Scalar(4) - i;             // 4 - i
    CHECK(a * b == Scalar(11) + Scalar(10) * i);
    CHECK(a - a == Scalar(0));
    CHECK((a / b) * b == a);

    Scalar c = Scalar(1) + Scalar(2) * i;
    CHECK(c.inverse() == (Scalar(1) - Scalar(2) * i) * Scalar::fraction(1, 5));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("predicates see through the representation") {
    CHECK(Scalar::fraction(7, 7).is_one());
    CHECK((Scalar::i() * Scalar::i() + Scalar(1)).is_zero());
    CHECK(Scalar::fraction(-4, 2).is_integer());
    CHECK_FALSE(Scalar::fraction(1, 2).is_integer());
    CHECK(Scalar::fraction(1, 2).is_rational());
    CHECK_FALSE(Scalar::i().is_rational());
}

TEST_CASE("parse accepts p and p/q, rejects everything else") {
    CHECK(Scalar::parse("5") == Scalar(5));
    CHECK(Scalar::parse("-7/3") == Scalar::fraction(-7, 3));
    CHECK(Scalar::parse("+2/4") == Scalar::fraction(1, 2));
    CHECK(Scalar::parse("0") == Scalar(0));
    CHECK_FALSE(Scalar::parse("1.5").has_value());
    CHECK_FALSE(Scalar::parse("3/0").has_value());
    CHECK_FALSE(Scalar::parse("").has_value());
    CHECK_FALSE(Scalar::parse("x").has_value());
    CHECK_FALSE(Scalar::parse("1/-2").has_value());
}

TEST_CASE("str round-trips through parse for rationals") {
    for (const Scalar& s : {Scalar::fraction(-7, 3), Scalar(0), Scalar(12),
                            Scalar::fraction(1, 1024)}) {
        auto back = Scalar::parse(s.str());
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
}

TEST_CASE("pow handles negative exponents and the 0^0 convention") {
    CHECK(w22::pow(Scalar(2), -3) == Scalar::fraction(1, 8));
    CHECK(w22::pow(Scalar(0), 0) == Scalar(1));
    CHECK(w22::pow(Scalar::fraction(-2, 3), 2) == Scalar::fraction(4, 9));
    CHECK(w22::pow(Scalar::i(), 3) == -Scalar::i());
    CHECK_THROWS_AS(w22::pow(Scalar(0), -1), std::domain_error);
}

TEST_CASE("binomial and factorial match the combinatorial values") {
    CHECK(w22::binomial(5, 2) == Scalar(10));
    CHECK(w22::binomial(0, 0) == Scalar(1));
    CHECK(w22::binomial(3, -1) == Scalar(0));
    CHECK(w22::binomial(3, 5) == Scalar(0));
    CHECK(w22::factorial(5) == Scalar(120));
    CHECK(w22::factorial(0) == Scalar(1));
}

TEST_CASE("order is a total order compatible with equality") {
    CHECK(Scalar::order(Scalar::fraction(1, 3), Scalar::fraction(1, 2)) < 0);
    CHECK(Scalar::order(Scalar(2), Scalar(2)) == 0);
    Scalar a = Scalar(1) + Scalar::i(), b = Scalar(1);
    CHECK(Scalar::order(a, b) == -Scalar::order(b, a));
    CHECK(Scalar::order(a, b) != 0);
}
