#include "doctest.h"
#include "w22/detid.hpp"
#include "w22/linalg.hpp"

using namespace w22;

TEST_CASE("superfactorial values") {
    CHECK(superfactorial(0) == Scalar(1));
    CHECK(superfactorial(1) == Scalar(1));
    CHECK(superfactorial(2) == Scalar(2));
    CHECK(superfactorial(3) == Scalar(12));
    CHECK(superfactorial(4) == Scalar(288));
    CHECK(superfactorial(5) == Scalar(34560));
}

TEST_CASE("one block: the closed form collapses to a superfactorial power") {
    // sizes {2}, lambda 3, r = 1: matrix rows n = 1, 2 over columns n^k 3^n
    BlockSpec spec{{2}, {Scalar(3)}, 1};
    Matrix m = build_matrix(spec);
    REQUIRE(m.size() == 2);
    CHECK(m[0][0] == Scalar(3));
    CHECK(m[0][1] == Scalar(3));
    CHECK(m[1][0] == Scalar(9));
    CHECK(m[1][1] == Scalar(18));
    CHECK(det_bruteforce(spec) == Scalar(27));
    CHECK(det_formula(spec) == Scalar(27)); // 1!! * 3^{2*3/2}
}

TEST_CASE("two singleton blocks give the plain Vandermonde factor") {
    // sizes {1,1}, lambdas {2,3}, r = 0: [[1,1],[2,3]], det = 1 = (3-2)
    BlockSpec spec{{1, 1}, {Scalar(2), Scalar(3)}, 0};
    CHECK(det_bruteforce(spec) == Scalar(1));
    CHECK(det_formula(spec) == Scalar(1));

    // r = 0 puts n = 0 in the first row; 0^0 = 1 keeps it well defined
    Matrix m = build_matrix(spec);
    CHECK(m[0][0] == Scalar(1));
    CHECK(m[0][1] == Scalar(1));
}

TEST_CASE("mixed shape with rational lambdas agrees across both routes") {
    BlockSpec spec{{2, 1}, {Scalar::fraction(1, 2), Scalar(-3)}, 2};
    Scalar closed = det_formula(spec);
    CHECK(closed == det_bruteforce(spec));
    CHECK_FALSE(closed.is_zero());
}

TEST_CASE("coincident lambdas kill the determinant in both routes") {
    BlockSpec spec{{1, 1}, {Scalar(3), Scalar(3)}, 1};
    CHECK(det_formula(spec).is_zero());
    CHECK(det_bruteforce(spec).is_zero());
}

TEST_CASE("invalid block data is rejected") {
    CHECK_THROWS_AS(build_matrix(BlockSpec{{2}, {Scalar(0)}, 1}), std::domain_error);
    CHECK_THROWS_AS(build_matrix(BlockSpec{{0}, {Scalar(2)}, 1}), std::domain_error);
    CHECK_THROWS_AS(build_matrix(BlockSpec{{1, 1}, {Scalar(2)}, 0}), std::domain_error);
    CHECK_THROWS_AS(build_matrix(BlockSpec{{1}, {Scalar(2)}, -1}), std::domain_error);
}
