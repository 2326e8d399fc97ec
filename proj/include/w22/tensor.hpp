#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "w22/linalg.hpp"
#include "w22/omega.hpp"
#include "w22/restricted.hpp"

namespace w22 {

class TensorModule;

/// -1 / 0 / +1 lexicographic comparison of exponent tuples of equal length.
int lex_compare(const Exponents& a, const Exponents& b);

/**
 * Element of a tensor module: finite sum of monomials
 *   s_1^{p_1} t_1^{q_1} ... s_m^{p_m} t_m^{q_m} (x) v,
 * stored as exponent tuple (p_1..p_m, q_1..q_m) -> V-component.  Tuples are
 * ordered lexicographically, which is the order behind degree().
 */
class TensorVector {
public:
    using FlatKey = std::pair<Exponents, PBWMonomial>;

    TensorVector() = default;

    bool is_zero() const { return terms_.empty(); }
    const TensorModule* module() const { return module_; }
    const std::map<Exponents, RestrictedVector>& terms() const { return terms_; }

    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector operator*(const Scalar& c) const;
    bool operator==(const TensorVector& o) const;
    bool operator!=(const TensorVector& o) const { return !(*this == o); }

    /// Lex-largest exponent tuple in the support (zero vector: domain error).
    Exponents degree() const;

    /// Sparse coordinates (tuple, V-basis label) -> Scalar, for spans/ranks.
    std::map<FlatKey, Scalar> flatten() const;

    std::string str() const;

private:
    friend class TensorModule;
    friend std::vector<std::vector<TensorVector>> w_coefficient_elements(const TensorVector&);
    friend std::vector<std::vector<TensorVector>> l_coefficient_elements(const TensorVector&);
    friend TensorVector strip_element(const TensorVector&, std::size_t);
    void add_term(const Exponents& e, const RestrictedVector& v);

    const TensorModule* module_ = nullptr;
    std::map<Exponents, RestrictedVector> terms_;
};

/**
 * Tensor product of m rank-two polynomial modules with a restricted module V:
 * generators act by the Leibniz rule across the m polynomial slots and the
 * V slot (C acts only through V).  Factor parameters need lambda_k != 0 and
 * alpha_k != 0; coincident lambdas are allowed (some analyses below require
 * distinctness and say so).
 */
class TensorModule {
public:
    using Vector = TensorVector;

    TensorModule(std::vector<OmegaParams> factors, RestrictedModulePtr v);

    std::size_t slots() const { return factors_.size(); }
    const OmegaParams& factor(std::size_t k) const { return factors_.at(k); }
    const std::vector<OmegaParams>& factors() const { return factors_; }
    const RestrictedModulePtr& v_module() const { return v_; }
    bool lambdas_distinct() const;

    Vector zero() const;
    /// Tuple exponents (p_1..p_m, q_1..q_m) on a V-component.
    Vector monomial(const Exponents& e, const RestrictedVector& v) const;
    /// 1 (x) ... (x) 1 (x) v.
    Vector vacuum(const RestrictedVector& v) const;
    bool contains(const Vector& v) const { return v.module() == this; }
    Vector act(const Generator& g, const Vector& v) const;

private:
    std::vector<OmegaParams> factors_;
    std::vector<Omega3Module> slot_modules_; // one per factor, shared scratch ring
    RestrictedModulePtr v_;
};

/// Maximum restriction bound over the V-components of g (0 for g = 0);
/// W_n and L_n kill every V-component for n at or beyond it.
std::int64_t v_restriction_bound(const TensorVector& g);

/// Per-slot maximal s-exponent P_k over the support of g (g != 0).
std::vector<std::int64_t> slot_s_degrees(const TensorVector& g);

/**
 * Coefficient elements of the W action: for n >= v_restriction_bound(g),
 *   W_n g = sum_k sum_{j=0}^{P_k+1} (-1)^j n^j lambda_k^n w[k][j],
 * where w[k][j] collects binom(p_k, j) s_k^{p_k-j} t_k^{q_k+1} and
 * alpha_k binom(p_k, j-1) s_k^{p_k-j+1} t_k^{q_k} over the support of g.
 * In particular w[k][0] = t_k g and w[k][P_k+1] = alpha_k * (strip of g).
 */
std::vector<std::vector<TensorVector>> w_coefficient_elements(const TensorVector& g);

/**
 * Coefficient elements of the L action: for n >= v_restriction_bound(g),
 *   L_n g = sum_k sum_{j=0}^{P_k+2} (-1)^j n^j lambda_k^n l[k][j].
 * In particular l[k][0] = s_k g.
 */
std::vector<std::vector<TensorVector>> l_coefficient_elements(const TensorVector& g);

/// Strip of g at slot k: terms of maximal s_k-exponent P_k, with that
/// exponent removed.
TensorVector strip_element(const TensorVector& g, std::size_t k);

/// dim span({g} union {w[k][j]}); assumes pairwise distinct lambdas.
/// Equals m+1 exactly when g != 0 has no s-dependence, >= m+2 otherwise.
std::size_t rank_rg(const TensorVector& g);

/// Span of {g} union {L_n g, W_n g : n_lo <= n <= n_hi}.
LinearSpan<TensorVector::FlatKey> operator_window_span(const TensorVector& g, std::int64_t n_lo,
                                                       std::int64_t n_hi);

struct ReductionReport {
    struct PerSlot {
        bool strip_in_span = false;
        bool t_bump_in_span = false;
        bool s_bump_in_span = false;
    };
    std::vector<PerSlot> slots;
    std::int64_t n_lo = 0, n_hi = 0;
    bool window_sufficient = false;
    bool all_passed() const;
};

/**
 * Checks that the three reduction targets derived from g (per slot k: the
 * strip element, t_k g, and s_k g) lie in span{g, L_n g, W_n g} over an
 * operator window starting at the V restriction bound.  Requires pairwise
 * distinct lambdas.  The default window length sum_k(P_k+3) + 2 is
 * guaranteed sufficient by the block-determinant identity.
 */
ReductionReport verify_reductions(const TensorVector& g);
ReductionReport verify_reductions(const TensorVector& g, std::int64_t n_lo, std::int64_t n_hi);

struct ReachReport {
    bool reached = false;
    std::size_t rounds_used = 0;
    bool saturated = false; // span stopped growing before the round limit
    std::size_t dimension = 0;
    explicit operator bool() const { return reached; }
};

/**
 * Iterated operator-window closure from start: each round spans every
 * frontier vector's {L_n b, W_n b} window (n from the vector's V restriction
 * bound upward, plus lookback negative indices) and inserts the results.
 * reached == true certifies target lies in the submodule generated by start;
 * a false result with saturated == false may only mean the round limit was
 * too small.
 */
ReachReport submodule_reach(const TensorVector& start, const TensorVector& target,
                            std::size_t max_rounds, std::int64_t lookback = 0);

/// submodule_reach from the vacuum 1 (x) ... (x) 1 (x) v0.
ReachReport generator_reach(const TensorModule& mod, const RestrictedVector& v0,
                            const TensorVector& target, std::size_t max_rounds,
                            std::int64_t lookback = 0);

struct DegenerateReport {
    bool closure_ok = false;      // images of spanning elements stay in M
    bool contains_vacuum = false; // 1 (x) 1 (x) v0 is in M
    bool proper = false;          // s_1 (x) v0 is not in M
    std::size_t images_checked = 0;
    bool all_passed() const { return closure_ok && contains_vacuum && proper; }
};

/**
 * Desk-scale witness that coincident lambdas break simplicity: for factors
 * with lambda_i = lambda_j (tensored over the trivial V), the subspace
 *   M = span{ t_i^a t_j^b (s_i + s_j)^r : a, b, r in N }
 * is checked to be action-closed (spanning elements with a, b, r <= r_bound,
 * operators |n| <= n_window, membership tested in a truncation of M large
 * enough to be exact) and proper (s_i is not in M).
 */
DegenerateReport degenerate_submodule_check(const OmegaParams& pi, const OmegaParams& pj,
                                            std::int64_t r_bound, std::int64_t n_window);

struct SlotFingerprint {
    Scalar lambda, alpha;
    UniPoly h;
    bool operator==(const SlotFingerprint& o) const {
        return lambda == o.lambda && alpha == o.alpha && h == o.h;
    }
};

/// Isomorphism invariants recovered from the module action alone.
struct Fingerprint {
    std::size_t m = 0;
    std::size_t r_min = 0; // minimal rank_rg over the probe sample
    std::vector<SlotFingerprint> slots; // canonically sorted
    bool operator==(const Fingerprint& o) const;
    std::string str() const;
};

/**
 * Recovers {(lambda_k, alpha_k, h_k)} by exact exponential-polynomial
 * fitting of operator-window data on 1 (x) ... (x) 1 (x) sample (the fit
 * matrix is the block generalized-Vandermonde one, nonsingular for distinct
 * lambdas), plus the minimal observed rank invariant.  Coincident lambdas
 * or a zero sample are diagnostic errors.
 */
Fingerprint fingerprint(const TensorModule& mod, const RestrictedVector& sample);

} // namespace w22
