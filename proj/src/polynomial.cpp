#include "w22/polynomial.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace w22 {

std::int64_t checked_exp_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("polynomial exponent overflow");
    return r;
}

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::monomial(const Scalar& c, std::int64_t e) {
    if (e < 0)
        throw std::domain_error("UniPoly::monomial: negative exponent");
    UniPoly p;
    p.set_coeff(e, c);
    return p;
}

UniPoly UniPoly::from_coeffs(const std::vector<Scalar>& coeffs) {
    UniPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.set_coeff(static_cast<std::int64_t>(i), coeffs[i]);
    return p;
}

void UniPoly::set_coeff(std::int64_t e, const Scalar& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

Scalar UniPoly::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.set_coeff(e, r.coeff(e) + c);
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.set_coeff(e, r.coeff(e) - c);
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::int64_t e = checked_exp_add(e1, e2);
            r.set_coeff(e, r.coeff(e) + c1 * c2);
        }
    return r;
}

UniPoly UniPoly::operator*(const Scalar& c) const {
    UniPoly r;
    if (c.is_zero())
        return r;
    for (const auto& [e, k] : terms_)
        r.terms_[e] = k * c;
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    for (const auto& [e, c] : terms_)
        if (e > 0)
            r.set_coeff(e - 1, c * Scalar(e));
    return r;
}

Scalar UniPoly::eval(const Scalar& x) const {
    // Horner over the sparse support
    Scalar acc(0);
    std::int64_t last = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!acc.is_zero())
            acc *= pow(x, last - it->first);
        acc += it->second;
        last = it->first;
    }
    return acc * pow(x, last);
}

std::string UniPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << it->second.str() << ")";
        if (it->first > 0)
            out << "*t^" << it->first;
    }
    return out.str();
}

UniPoly divide_linear(const UniPoly& h, const Scalar& alpha) {
    // Horner/synthetic division: walking down from the top coefficient,
    // each partial sum is a quotient coefficient.
    Scalar h_alpha = h.eval(alpha);
    UniPoly g;
    Scalar carry(0);
    std::int64_t d = h.degree();
    for (std::int64_t e = d; e >= 1; --e) {
        carry = carry * alpha + h.coeff(e);
        g = g + UniPoly::monomial(carry, e - 1);
    }
    UniPoly check = (UniPoly::variable() - UniPoly(alpha)) * g + UniPoly(h_alpha);
    if (check != h)
        throw std::logic_error("divide_linear: division identity failed");
    return g;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(RingPtr ring, const Scalar& c) : ring_(std::move(ring)) {
    if (!c.is_zero())
        terms_[Exponents(ring_->arity(), 0)] = c;
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents e, const Scalar& c) {
    if (e.size() != ring->arity())
        throw std::domain_error("MultiPoly::monomial: exponent arity mismatch");
    for (std::int64_t x : e)
        if (x < 0)
            throw std::domain_error("MultiPoly::monomial: negative exponent");
    MultiPoly p(std::move(ring));
    if (!c.is_zero())
        p.terms_[std::move(e)] = c;
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t var) {
    Exponents e(ring->arity(), 0);
    e.at(var) = 1;
    return monomial(std::move(ring), std::move(e), Scalar(1));
}

MultiPoly MultiPoly::from_uni(RingPtr ring, std::size_t var, const UniPoly& p) {
    MultiPoly r(ring);
    for (const auto& [e, c] : p.terms()) {
        Exponents t(ring->arity(), 0);
        t.at(var) = e;
        r.terms_[std::move(t)] = c;
    }
    return r;
}

MultiPoly MultiPoly::shifted_var_power(RingPtr ring, std::size_t var, const Scalar& shift,
                                       std::int64_t p) {
    if (p < 0)
        throw std::domain_error("MultiPoly::shifted_var_power: negative power");
    MultiPoly r(ring);
    for (std::int64_t j = 0; j <= p; ++j) {
        Exponents e(ring->arity(), 0);
        e.at(var) = p - j;
        r.add_term(e, binomial(p, j) * pow(shift, j));
    }
    return r;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
    if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
        throw std::domain_error("MultiPoly: ring mismatch");
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::int64_t MultiPoly::total_degree() const {
    std::int64_t best = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (std::int64_t x : e)
            d = checked_exp_add(d, x);
        if (d > best)
            best = d;
    }
    return best;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = checked_exp_add(e1[i], e2[i]);
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly r(ring_);
    if (c.is_zero())
        return r;
    for (const auto& [e, k] : terms_)
        r.terms_[e] = k * c;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (ring_ && o.ring_ && !(*ring_ == *o.ring_))
        return false;
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= ring_->arity())
        throw std::domain_error("MultiPoly::derivative: no such variable");
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) {
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * Scalar(e[var]));
        }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << it->second.str() << ")";
        for (std::size_t i = 0; i < it->first.size(); ++i)
            if (it->first[i] > 0) {
                out << "*" << ring_->var(i);
                if (it->first[i] > 1)
                    out << "^" << it->first[i];
            }
    }
    return out.str();
}

} // namespace w22
