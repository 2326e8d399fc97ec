#pragma once

#include <cstdint>
#include <vector>

#include "w22/polynomial.hpp"
#include "w22/uea.hpp"

namespace w22 {

/**
 * Parameters (lambda, alpha, h) of the polynomial module on C[s,t]:
 * lambda nonzero, alpha arbitrary, h a polynomial in t.  Derived data is
 * precomputed: g = (h - h(alpha)) / (t - alpha) and h(alpha).
 */
struct OmegaParams {
    OmegaParams(Scalar lambda_, Scalar alpha_, UniPoly h_);

    Scalar lambda, alpha;
    UniPoly h;
    UniPoly g;       // exact quotient (h - h(alpha)) / (t - alpha)
    Scalar h_alpha;  // h(alpha)

    bool operator==(const OmegaParams& o) const {
        return lambda == o.lambda && alpha == o.alpha && h == o.h;
    }
};

/// F(f) = g*f - f'  (f a polynomial in t).
UniPoly f_map(const OmegaParams& p, const UniPoly& f);

/// G(f) = t*F(f) + h(alpha)*f.
UniPoly g_map(const OmegaParams& p, const UniPoly& f);

/**
 * The rank-one polynomial module on C[s]:
 *   L_n(s^p) = lambda^n (s - n alpha)(s - n)^p,  W_n = C = 0.
 */
class Omega2Module {
public:
    using Vector = MultiPoly;

    Omega2Module(Scalar lambda, Scalar alpha);

    const RingPtr& ring() const { return ring_; }
    const Scalar& lambda() const { return lambda_; }
    const Scalar& alpha() const { return alpha_; }

    Vector zero() const { return MultiPoly(ring_); }
    Vector one() const { return MultiPoly(ring_, Scalar(1)); }
    Vector monomial(std::int64_t p) const;
    bool contains(const Vector& v) const;
    Vector act(const Generator& g, const Vector& v) const;

private:
    Scalar lambda_, alpha_;
    RingPtr ring_; // {"s"}
};

/**
 * The rank-two polynomial module on C[s,t]:
 *   L_n(s^p t^q) = lambda^n (s-n)^p (s t^q + n G(t^q) - n^2 alpha F(t^q))
 *   W_n(s^p t^q) = lambda^n (t - n alpha)(s-n)^p t^q
 *   C = 0.
 */
class Omega3Module {
public:
    using Vector = MultiPoly;

    explicit Omega3Module(OmegaParams params);
    /// Shares a caller-provided {"s","t"} ring (used by tensor factors).
    Omega3Module(OmegaParams params, RingPtr ring);

    const OmegaParams& params() const { return params_; }
    const RingPtr& ring() const { return ring_; }

    Vector zero() const { return MultiPoly(ring_); }
    Vector one() const { return MultiPoly(ring_, Scalar(1)); }
    Vector monomial(std::int64_t p, std::int64_t q) const;
    bool contains(const Vector& v) const;
    Vector act(const Generator& g, const Vector& v) const;

    /// Action on a single monomial s^p t^q (building block of act).
    Vector act_monomial(const Generator& g, std::int64_t p, std::int64_t q) const;

private:
    OmegaParams params_;
    RingPtr ring_; // {"s","t"}
};

/**
 * Basis of the space of multiplication maps u(s,t) -> u(s,t) v(s,t) that
 * intertwine the actions of source and target parameters, with v of total
 * degree <= deg_bound, the intertwining defect checked exactly for
 * L_n, W_n with |n| <= window against low-degree test monomials u.
 */
std::vector<MultiPoly> hom_space(const OmegaParams& source, const OmegaParams& target,
                                 std::int64_t deg_bound, std::int64_t window);

/// Classified dimension of the space above: delta(lambda) delta(alpha) *
/// [alpha != 0 ? delta(h) : (h2 - h1 constant in N)].
std::size_t hom_dimension_classified(const OmegaParams& source, const OmegaParams& target);

} // namespace w22
