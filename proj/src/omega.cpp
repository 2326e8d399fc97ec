#include "w22/omega.hpp"

#include <stdexcept>

#include "w22/linalg.hpp"

namespace w22 {

OmegaParams::OmegaParams(Scalar lambda_, Scalar alpha_, UniPoly h_)
    : lambda(std::move(lambda_)), alpha(std::move(alpha_)), h(std::move(h_)) {
    if (lambda.is_zero())
        throw std::domain_error("OmegaParams: lambda must be nonzero");
    g = divide_linear(h, alpha);
    h_alpha = h.eval(alpha);
}

UniPoly f_map(const OmegaParams& p, const UniPoly& f) {
    return p.g * f - f.derivative();
}

UniPoly g_map(const OmegaParams& p, const UniPoly& f) {
    return UniPoly::variable() * f_map(p, f) + f * p.h_alpha;
}

// ------------------------------------------------------------ Omega2Module

Omega2Module::Omega2Module(Scalar lambda, Scalar alpha)
    : lambda_(std::move(lambda)), alpha_(std::move(alpha)),
      ring_(std::make_shared<PolyRing>(std::vector<std::string>{"s"})) {
    if (lambda_.is_zero())
        throw std::domain_error("Omega2Module: lambda must be nonzero");
}

Omega2Module::Vector Omega2Module::monomial(std::int64_t p) const {
    return MultiPoly::monomial(ring_, {p}, Scalar(1));
}

bool Omega2Module::contains(const Vector& v) const {
    return v.ring() && *v.ring() == *ring_;
}

Omega2Module::Vector Omega2Module::act(const Generator& g, const Vector& v) const {
    if (!contains(v))
        throw std::domain_error("Omega2Module::act: vector from a different module");
    Vector out = zero();
    if (g.tag != Generator::Tag::L)
        return out; // W_n and C act as zero
    std::int64_t n = g.index;
    Scalar ln = pow(lambda_, n);
    MultiPoly s = MultiPoly::variable(ring_, 0);
    MultiPoly front = (s - MultiPoly(ring_, Scalar(n) * alpha_)) * ln;
    for (const auto& [e, c] : v.terms()) {
        MultiPoly shifted = MultiPoly::shifted_var_power(ring_, 0, Scalar(-n), e[0]);
        out = out + front * shifted * c;
    }
    return out;
}

// ------------------------------------------------------------ Omega3Module

Omega3Module::Omega3Module(OmegaParams params)
    : Omega3Module(std::move(params),
                   std::make_shared<PolyRing>(std::vector<std::string>{"s", "t"})) {}

Omega3Module::Omega3Module(OmegaParams params, RingPtr ring)
    : params_(std::move(params)), ring_(std::move(ring)) {
    if (ring_->arity() != 2)
        throw std::domain_error("Omega3Module: ring must have two variables");
}

Omega3Module::Vector Omega3Module::monomial(std::int64_t p, std::int64_t q) const {
    return MultiPoly::monomial(ring_, {p, q}, Scalar(1));
}

bool Omega3Module::contains(const Vector& v) const {
    return v.ring() && *v.ring() == *ring_;
}

Omega3Module::Vector Omega3Module::act_monomial(const Generator& g, std::int64_t p,
                                                std::int64_t q) const {
    if (p < 0 || q < 0)
        throw std::domain_error("Omega3Module::act_monomial: negative exponent");
    Vector out = zero();
    if (g.is_central())
        return out;
    std::int64_t n = g.index;
    Scalar ln = pow(params_.lambda, n);
    UniPoly tq = UniPoly::monomial(Scalar(1), q);
    MultiPoly sn_p = MultiPoly::shifted_var_power(ring_, 0, Scalar(-n), p); // (s-n)^p
    if (g.tag == Generator::Tag::W) {
        // lambda^n (t - n alpha)(s-n)^p t^q
        MultiPoly t = MultiPoly::variable(ring_, 1);
        MultiPoly tpart = (t - MultiPoly(ring_, Scalar(n) * params_.alpha)) *
                          MultiPoly::from_uni(ring_, 1, tq);
        return tpart * sn_p * ln;
    }
    // lambda^n (s-n)^p (s t^q + n G(t^q) - n^2 alpha F(t^q))
    MultiPoly inner = MultiPoly::variable(ring_, 0) * MultiPoly::from_uni(ring_, 1, tq);
    inner = inner + MultiPoly::from_uni(ring_, 1, g_map(params_, tq)) * Scalar(n);
    inner = inner - MultiPoly::from_uni(ring_, 1, f_map(params_, tq)) * (Scalar(n) * Scalar(n) * params_.alpha);
    return sn_p * inner * ln;
}

Omega3Module::Vector Omega3Module::act(const Generator& g, const Vector& v) const {
    if (!contains(v))
        throw std::domain_error("Omega3Module::act: vector from a different module");
    Vector out = zero();
    if (g.is_central())
        return out;
    for (const auto& [e, c] : v.terms())
        out = out + act_monomial(g, e[0], e[1]) * c;
    return out;
}

// --------------------------------------------------------------- hom_space

namespace {

/// Graded-lex list of monomials (a, b) with a + b <= deg_bound.
std::vector<std::pair<std::int64_t, std::int64_t>> candidate_monomials(std::int64_t deg_bound) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t d = 0; d <= deg_bound; ++d)
        for (std::int64_t a = d; a >= 0; --a)
            out.emplace_back(a, d - a);
    return out;
}

} // namespace

std::vector<MultiPoly> hom_space(const OmegaParams& source, const OmegaParams& target,
                                 std::int64_t deg_bound, std::int64_t window) {
    if (deg_bound < 0 || window < 1)
        throw std::domain_error("hom_space: need deg_bound >= 0 and window >= 1");
    Omega3Module src(source), tgt(target);
    RingPtr ring = tgt.ring();

    auto cands = candidate_monomials(deg_bound);
    std::size_t ncols = cands.size();

    // Defect of the candidate basis vector v0 = s^a t^b against test
    // monomial u and generator x:  x.(u v0) in target - (x.u in source) v0.
    // Its coefficients, grouped per (x, u), are rows of a homogeneous system
    // in the candidate coefficients.
    Matrix system;
    for (std::int64_t n = -window; n <= window; ++n) {
        for (int tag = 0; tag < 2; ++tag) {
            Generator x = tag == 0 ? Generator::L(n) : Generator::W(n);
            for (std::int64_t up = 0; up <= 2; ++up)
                for (std::int64_t uq = 0; uq <= 2; ++uq) {
                    MultiPoly xu_src = src.act_monomial(x, up, uq);
                    std::map<Exponents, std::vector<Scalar>> block;
                    for (std::size_t col = 0; col < ncols; ++col) {
                        auto [a, b] = cands[col];
                        MultiPoly defect =
                            tgt.act_monomial(x, up + a, uq + b) -
                            xu_src * MultiPoly::monomial(ring, {a, b}, Scalar(1));
                        for (const auto& [e, c] : defect.terms()) {
                            auto [it, inserted] =
                                block.try_emplace(e, std::vector<Scalar>(ncols, Scalar(0)));
                            it->second[col] += c;
                        }
                    }
                    for (auto& [e, row] : block)
                        system.push_back(std::move(row));
                }
        }
    }

    std::vector<MultiPoly> basis;
    for (const auto& vec : nullspace(std::move(system), ncols)) {
        MultiPoly v(ring);
        for (std::size_t col = 0; col < ncols; ++col)
            v = v + MultiPoly::monomial(ring, {cands[col].first, cands[col].second}, vec[col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t hom_dimension_classified(const OmegaParams& source, const OmegaParams& target) {
    if (!(source.lambda == target.lambda) || !(source.alpha == target.alpha))
        return 0;
    if (!source.alpha.is_zero())
        return source.h == target.h ? 1 : 0;
    UniPoly diff = target.h - source.h;
    if (diff.is_zero())
        return 1; // shift by t^0
    if (diff.degree() > 0)
        return 0;
    Scalar c = diff.coeff(0);
    return (c.is_integer() && !(c.re() < 0)) ? 1 : 0;
}

} // namespace w22
