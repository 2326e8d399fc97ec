#include "w22/detid.hpp"

#include <stdexcept>

namespace w22 {

std::int64_t BlockSpec::total() const {
    std::int64_t s = 0;
    for (std::int64_t x : sizes)
        s += x;
    return s;
}

void BlockSpec::validate() const {
    if (sizes.size() != lambdas.size())
        throw std::domain_error("BlockSpec: sizes/lambdas length mismatch");
    if (sizes.empty())
        throw std::domain_error("BlockSpec: empty shape");
    for (std::int64_t s : sizes)
        if (s < 1)
            throw std::domain_error("BlockSpec: block sizes must be >= 1");
    for (const Scalar& l : lambdas)
        if (l.is_zero())
            throw std::domain_error("BlockSpec: lambdas must be nonzero");
    if (r < 0)
        throw std::domain_error("BlockSpec: r must be a nonnegative integer");
}

Matrix build_matrix(const BlockSpec& spec) {
    spec.validate();
    std::int64_t s = spec.total();
    Matrix m(static_cast<std::size_t>(s));
    for (std::int64_t p = 1; p <= s; ++p) {
        auto& row = m[static_cast<std::size_t>(p - 1)];
        row.reserve(static_cast<std::size_t>(s));
        std::int64_t n = p + spec.r - 1;
        for (std::size_t b = 0; b < spec.sizes.size(); ++b) {
            Scalar ln = pow(spec.lambdas[b], n);
            for (std::int64_t k = 0; k < spec.sizes[b]; ++k)
                row.push_back(pow(Scalar(n), k) * ln);
        }
    }
    return m;
}

Scalar superfactorial(std::int64_t m) {
    if (m < 0)
        throw std::domain_error("superfactorial: negative argument");
    Scalar acc(1);
    for (std::int64_t k = 2; k <= m; ++k)
        acc *= factorial(k);
    return acc;
}

Scalar det_formula(const BlockSpec& spec) {
    spec.validate();
    Scalar acc(1);
    for (std::size_t j = 0; j < spec.sizes.size(); ++j) {
        std::int64_t sj = spec.sizes[j];
        acc *= superfactorial(sj - 1);
        // s_j (s_j + 2r - 1) is always even
        std::int64_t e = sj * (sj + 2 * spec.r - 1) / 2;
        acc *= pow(spec.lambdas[j], e);
    }
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        for (std::size_t j = i + 1; j < spec.sizes.size(); ++j)
            acc *= pow(spec.lambdas[j] - spec.lambdas[i], spec.sizes[i] * spec.sizes[j]);
    return acc;
}

Scalar det_bruteforce(const BlockSpec& spec) {
    return det_bareiss(build_matrix(spec));
}

} // namespace w22
