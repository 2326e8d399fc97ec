#include "w22/algebra.hpp"

#include <sstream>

namespace w22 {

std::string Generator::str() const {
    switch (tag) {
    case Tag::C:
        return "C";
    case Tag::W:
        return "W(" + std::to_string(index) + ")";
    default:
        return "L(" + std::to_string(index) + ")";
    }
}

void LieElement::add(const Generator& g, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar LieElement::coeff(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(0) : it->second;
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [g, c] : o.terms_)
        r.add(g, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [g, c] : o.terms_)
        r.add(g, -c);
    return r;
}

LieElement LieElement::operator*(const Scalar& c) const {
    LieElement r;
    if (c.is_zero())
        return r;
    for (const auto& [g, k] : terms_)
        r.add(g, k * c);
    return r;
}

std::string LieElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.str() << ")*" << g.str();
    }
    return out.str();
}

namespace {

/// Central term of [X_m, Y_{-m}]: (m^3 - m)/12.
Scalar central_coeff(std::int64_t m) {
    Scalar mm(m);
    return (pow(mm, 3) - mm) * Scalar::fraction(1, 12);
}

} // namespace

LieElement bracket(const Generator& x, const Generator& y) {
    using Tag = Generator::Tag;
    LieElement r;
    if (x.is_central() || y.is_central())
        return r;
    if (x.tag == Tag::W && y.tag == Tag::W)
        return r;
    if (x.tag == Tag::W) {
        // [W_m, L_n] = -[L_n, W_m]
        return bracket(y, x) * Scalar(-1);
    }
    std::int64_t m = x.index, n = y.index;
    Generator target = (y.tag == Tag::L) ? Generator::L(m + n) : Generator::W(m + n);
    r.add(target, Scalar(n - m));
    if (m + n == 0)
        r.add(Generator::C(), central_coeff(m));
    return r;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement r;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) {
            LieElement b = bracket(gx, gy) * (cx * cy);
            r = r + b;
        }
    return r;
}

} // namespace w22
