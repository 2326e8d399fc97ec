#pragma once

#include <cstdint>
#include <vector>

#include "w22/linalg.hpp"
#include "w22/scalar.hpp"

namespace w22 {

/**
 * Shape of the structured generalized-Vandermonde matrix: m column blocks,
 * block t of width sizes[t] built from base lambdas[t] (nonzero), sampled at
 * rows n = r, r+1, ..., r+s-1 where s is the total width.  Column k inside
 * block t holds f(n) = n^k lambda_t^n for k = 0..sizes[t]-1, with 0^0 = 1.
 */
struct BlockSpec {
    std::vector<std::int64_t> sizes;
    std::vector<Scalar> lambdas;
    std::int64_t r = 0;

    std::int64_t total() const;
    void validate() const; // sizes >= 1, lambdas nonzero, r >= 0, lengths match
};

/// The s x s matrix y[p][q] = f_q(p + r - 1), rows p = 1..s.
Matrix build_matrix(const BlockSpec& spec);

/// Superfactorial m!! = m! (m-1)! ... 1!, with 0!! = 1.
Scalar superfactorial(std::int64_t m);

/**
 * Closed form for det(build_matrix(spec)):
 *
 *   prod_j (s_j - 1)!! * lambda_j^{s_j (s_j + 2r - 1)/2}
 *   * prod_{i<j} (lambda_j - lambda_i)^{s_i s_j}
 *
 * Nonzero exactly when the lambdas are pairwise distinct.
 */
Scalar det_formula(const BlockSpec& spec);

/// Independent evaluation route: build the matrix and run fraction-free
/// elimination.  Kept separate from det_formula on purpose.
Scalar det_bruteforce(const BlockSpec& spec);

} // namespace w22
