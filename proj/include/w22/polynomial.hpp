#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "w22/scalar.hpp"

namespace w22 {

/**
 * UniPoly: sparse polynomial in one variable over Scalar.  The variable is
 * anonymous (printed as "t").  Invariant: no zero coefficients are stored,
 * so structural equality is exact polynomial equality.
 */
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Scalar& c) { set_coeff(0, c); }
    UniPoly(long c) : UniPoly(Scalar(c)) {}

    /// The monomial c * t^e.
    static UniPoly monomial(const Scalar& c, std::int64_t e);
    static UniPoly variable() { return monomial(Scalar(1), 1); }
    /// Coefficients in ascending powers: {c0, c1, ...}.
    static UniPoly from_coeffs(const std::vector<Scalar>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Scalar coeff(std::int64_t e) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Scalar& c) const;
    bool operator==(const UniPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;

    const std::map<std::int64_t, Scalar>& terms() const { return terms_; }
    std::string str() const;

private:
    void set_coeff(std::int64_t e, const Scalar& c);
    std::map<std::int64_t, Scalar> terms_; // exponent -> nonzero coefficient
};

/**
 * Synthetic division of h by (t - alpha): returns the unique g with
 *   h(t) = (t - alpha) * g(t) + h(alpha).
 * The identity is re-checked exactly before returning.
 */
UniPoly divide_linear(const UniPoly& h, const Scalar& alpha);

/// Variable list of a polynomial ring, fixed per instance.  MultiPoly
/// operations require both operands to share one ring (compared by content).
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::size_t arity() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& vars() const { return vars_; }
    bool operator==(const PolyRing& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Exponents = std::vector<std::int64_t>;

/**
 * MultiPoly: sparse multivariate polynomial over Scalar, terms keyed by
 * exponent tuples in the ring's variable order.  Exponents are machine
 * words; additions that would overflow throw rather than wrap.
 */
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, const Scalar& c);

    static MultiPoly monomial(RingPtr ring, Exponents e, const Scalar& c);
    static MultiPoly variable(RingPtr ring, std::size_t var);
    /// Embed a UniPoly as a polynomial in variable `var` of `ring`.
    static MultiPoly from_uni(RingPtr ring, std::size_t var, const UniPoly& p);
    /// (x_var + shift)^p expanded by the binomial theorem (p >= 0).
    static MultiPoly shifted_var_power(RingPtr ring, std::size_t var, const Scalar& shift,
                                       std::int64_t p);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Exponents& e) const;
    /// Max total degree over terms; -1 for the zero polynomial.
    std::int64_t total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(std::size_t var) const;

    const std::map<Exponents, Scalar>& terms() const { return terms_; }
    std::string str() const;

private:
    void check_ring(const MultiPoly& o) const;
    void add_term(const Exponents& e, const Scalar& c);

    RingPtr ring_;
    std::map<Exponents, Scalar> terms_; // exponent tuple -> nonzero coefficient
};

/// Exponent sum with overflow detection; throws std::overflow_error.
std::int64_t checked_exp_add(std::int64_t a, std::int64_t b);

} // namespace w22
