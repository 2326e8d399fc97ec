#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "w22/uea.hpp"

namespace w22 {

/// Highest-weight data of a Verma-type module: central charge and the
/// L_0 / W_0 eigenvalues on the generating vector.
struct HighestWeight {
    Scalar c, h_l, h_w;
};

/// Basis label of a Verma-type module: a product of negative-index
/// generators applied to the highest-weight vector, written in PBW order
/// (non-decreasing left to right; the empty product labels v_hw itself).
using PBWMonomial = std::vector<Generator>;

class RestrictedModule;
using RestrictedModulePtr = std::shared_ptr<const RestrictedModule>;

/// Element of a restricted module: finite combination of PBW basis labels.
/// Vectors remember their module; mixing modules is a domain error.
class RestrictedVector {
public:
    RestrictedVector() = default;

    bool is_zero() const { return terms_.empty(); }
    const RestrictedModulePtr& module() const { return module_; }
    Scalar coeff(const PBWMonomial& m) const;
    const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }

    RestrictedVector operator+(const RestrictedVector& o) const;
    RestrictedVector operator-(const RestrictedVector& o) const;
    RestrictedVector operator*(const Scalar& c) const;
    bool operator==(const RestrictedVector& o) const;
    bool operator!=(const RestrictedVector& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend class RestrictedModule;
    void add(const PBWMonomial& m, const Scalar& c);

    RestrictedModulePtr module_;
    std::map<PBWMonomial, Scalar> terms_;
};

/**
 * Restricted module over W(2,2): every vector is killed by all L_n, W_n
 * with n large enough.  Two constructions are provided:
 *
 *  - trivial(): the one-dimensional module on which every generator
 *    (including C) acts as zero;
 *  - verma(hw): the Verma-type module induced from a highest-weight vector
 *    v_hw with C = c, L_0 = h_l, W_0 = h_w, and L_n v_hw = W_n v_hw = 0 for
 *    n > 0; the PBW monomials in negative generators form a basis.
 */
class RestrictedModule : public std::enable_shared_from_this<RestrictedModule> {
public:
    enum class Kind { Trivial, Verma };

    static RestrictedModulePtr trivial();
    static RestrictedModulePtr verma(const HighestWeight& hw);

    Kind kind() const { return kind_; }
    const HighestWeight& hw() const { return hw_; }

    using Vector = RestrictedVector;

    Vector zero() const;
    /// The distinguished generator: v_hw (Verma) or the basis vector (trivial).
    Vector generator() const;
    /// Basis vector for a canonical monomial label (trivial: empty label only).
    Vector basis_vector(const PBWMonomial& m) const;
    bool contains(const Vector& v) const { return v.module().get() == this; }
    Vector act(const Generator& g, const Vector& v) const;

private:
    explicit RestrictedModule(Kind k, HighestWeight hw) : kind_(k), hw_(hw) {}
    Vector act_monomial(const Generator& g, const PBWMonomial& m) const;

    Kind kind_;
    HighestWeight hw_;
};

/// True when the label is a valid PBW monomial: all indices negative,
/// generators non-decreasing in the PBW order.
bool is_canonical_pbw(const PBWMonomial& m);

/// Total depth of a monomial label: the sum of |index| over its generators.
std::int64_t pbw_depth(const PBWMonomial& m);

/**
 * A bound i with L_n v = W_n v = 0 for all n >= i: 0 for the trivial module
 * or the zero vector, max term depth + 1 for a Verma-type vector.
 */
std::int64_t restriction_bound(const RestrictedVector& v);

} // namespace w22
