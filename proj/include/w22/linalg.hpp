#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "w22/scalar.hpp"

namespace w22 {

/// Dense row-major matrix over Scalar.
using Matrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form (deterministic: first nonzero pivot,
/// rows scanned top to bottom).  Returns the pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of { x : m x = 0 } for a matrix with `cols` columns, one vector per
/// free column, in column order.  Canonical: each has 1 at its free column.
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols);

/// Exact solution of a x = b (free variables set to zero); nullopt when
/// inconsistent.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

/// Determinant by fraction-free (Bareiss) elimination: rows are first scaled
/// to clear denominators, then eliminated with exact single divisions, which
/// keeps intermediate entries polynomial-sized instead of doubling digit
/// counts the way naive Gaussian elimination can.
Scalar det_bareiss(Matrix m);

/**
 * Incrementally built subspace of a sparse coordinate space keyed by Key.
 * The basis is kept fully inter-reduced with unit leading coefficients
 * (leading = largest key), so dimension, membership, and reduction are
 * exact and canonical.
 */
template <class Key>
class LinearSpan {
public:
    using Vec = std::map<Key, Scalar>;

    /// Normal form of v modulo the span.
    Vec reduce(Vec v) const {
        for (const auto& b : basis_) {
            auto it = v.find(lead(b));
            if (it == v.end())
                continue;
            Scalar c = it->second;
            // v -= c * b; touches only keys <= lead(b), so one pass suffices
            for (const auto& [k, bc] : b) {
                auto [vit, inserted] = v.try_emplace(k, Scalar(0));
                vit->second -= c * bc;
                if (vit->second.is_zero())
                    v.erase(vit);
            }
        }
        return v;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }

    /// Adds v to the span; true when the dimension grew.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        if (v.empty())
            return false;
        Scalar inv = v.rbegin()->second.inverse();
        for (auto& [k, c] : v)
            c *= inv;
        // back-substitute into the existing basis to stay inter-reduced
        for (auto& b : basis_) {
            auto it = b.find(lead(v));
            if (it == b.end())
                continue;
            Scalar c = it->second;
            for (const auto& [k, vc] : v) {
                auto [bit, inserted] = b.try_emplace(k, Scalar(0));
                bit->second -= c * vc;
                if (bit->second.is_zero())
                    b.erase(bit);
            }
        }
        auto pos = basis_.begin();
        while (pos != basis_.end() && lead(v) < lead(*pos))
            ++pos;
        basis_.insert(pos, std::move(v));
        return true;
    }

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

private:
    static const Key& lead(const Vec& v) { return v.rbegin()->first; }

    std::vector<Vec> basis_; // leading keys strictly descending
};

} // namespace w22
