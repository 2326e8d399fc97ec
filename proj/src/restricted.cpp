#include "w22/restricted.hpp"

#include <sstream>
#include <stdexcept>

namespace w22 {

Scalar RestrictedVector::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void RestrictedVector::add(const PBWMonomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

RestrictedVector RestrictedVector::operator+(const RestrictedVector& o) const {
    if (module_ != o.module_)
        throw std::domain_error("RestrictedVector: mixing vectors from different modules");
    RestrictedVector r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add(m, c);
    return r;
}

RestrictedVector RestrictedVector::operator-(const RestrictedVector& o) const {
    return *this + o * Scalar(-1);
}

RestrictedVector RestrictedVector::operator*(const Scalar& c) const {
    RestrictedVector r;
    r.module_ = module_;
    if (c.is_zero())
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_[m] = k * c;
    return r;
}

bool RestrictedVector::operator==(const RestrictedVector& o) const {
    return module_ == o.module_ && terms_ == o.terms_;
}

std::string RestrictedVector::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.str() << ")*";
        for (const auto& g : m)
            out << g.str() << ".";
        out << "v";
    }
    return out.str();
}

bool is_canonical_pbw(const PBWMonomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_central() || m[i].index >= 0)
            return false;
        if (i + 1 < m.size() && m[i] > m[i + 1])
            return false;
    }
    return true;
}

std::int64_t pbw_depth(const PBWMonomial& m) {
    std::int64_t d = 0;
    for (const auto& g : m)
        d += -g.index;
    return d;
}

RestrictedModulePtr RestrictedModule::trivial() {
    return RestrictedModulePtr(new RestrictedModule(Kind::Trivial, HighestWeight{}));
}

RestrictedModulePtr RestrictedModule::verma(const HighestWeight& hw) {
    return RestrictedModulePtr(new RestrictedModule(Kind::Verma, hw));
}

RestrictedVector RestrictedModule::zero() const {
    RestrictedVector v;
    v.module_ = shared_from_this();
    return v;
}

RestrictedVector RestrictedModule::generator() const {
    return basis_vector({});
}

RestrictedVector RestrictedModule::basis_vector(const PBWMonomial& m) const {
    if (kind_ == Kind::Trivial && !m.empty())
        throw std::domain_error("RestrictedModule::basis_vector: trivial module has only v");
    if (!is_canonical_pbw(m))
        throw std::domain_error("RestrictedModule::basis_vector: label not in PBW order");
    RestrictedVector v = zero();
    v.terms_[m] = Scalar(1);
    return v;
}

RestrictedVector RestrictedModule::act(const Generator& g, const RestrictedVector& v) const {
    if (!contains(v))
        throw std::domain_error("RestrictedModule::act: vector from a different module");
    RestrictedVector out = zero();
    for (const auto& [m, c] : v.terms())
        out = out + act_monomial(g, m) * c;
    return out;
}

RestrictedVector RestrictedModule::act_monomial(const Generator& g, const PBWMonomial& m) const {
    if (kind_ == Kind::Trivial)
        return zero(); // every generator kills the trivial module
    if (g.is_central())
        return basis_vector(m) * hw_.c;
    if (m.empty()) {
        if (g.index < 0)
            return basis_vector({g});
        if (g.index == 0)
            return generator() * (g.tag == Generator::Tag::L ? hw_.h_l : hw_.h_w);
        return zero(); // positive modes kill v_hw
    }
    if (g.index < 0 && !(g > m.front())) {
        PBWMonomial ext;
        ext.reserve(m.size() + 1);
        ext.push_back(g);
        ext.insert(ext.end(), m.begin(), m.end());
        return basis_vector(ext);
    }
    // g is out of order in front: g x rest = x (g rest) + [g, x] rest.
    // Each rewrite either shortens the label or moves toward PBW order,
    // so the recursion terminates.
    Generator x = m.front();
    PBWMonomial rest(m.begin() + 1, m.end());
    RestrictedVector out = act(x, act_monomial(g, rest));
    LieElement swap = bracket(g, x);
    for (const auto& [b, cb] : swap.terms())
        out = out + act_monomial(b, rest) * cb;
    return out;
}

std::int64_t restriction_bound(const RestrictedVector& v) {
    if (!v.module())
        throw std::domain_error("restriction_bound: vector without a module");
    if (v.module()->kind() == RestrictedModule::Kind::Trivial || v.is_zero())
        return 0;
    std::int64_t best = 0;
    for (const auto& [m, c] : v.terms())
        best = std::max(best, pbw_depth(m));
    return best + 1;
}

} // namespace w22
