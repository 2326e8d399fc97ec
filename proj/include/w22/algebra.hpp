#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "w22/scalar.hpp"

namespace w22 {

/**
 * Basis generator of the Lie algebra W(2,2): L_n, W_n (n in Z) or the
 * central element C.  Defining relations, with C central and [W,W] = 0:
 *
 *   [L_m, L_n] = (n - m) L_{m+n} + delta_{m+n,0} (m^3 - m)/12 C
 *   [L_m, W_n] = (n - m) W_{m+n} + delta_{m+n,0} (m^3 - m)/12 C
 *
 * Generators carry the total order used for PBW normal forms: C first,
 * then by index ascending, with W_n before L_n at equal index.
 */
struct Generator {
    enum class Tag : std::uint8_t { C = 0, W = 1, L = 2 };

    Tag tag = Tag::C;
    std::int64_t index = 0; // always 0 for C

    static Generator L(std::int64_t n) { return {Tag::L, n}; }
    static Generator W(std::int64_t n) { return {Tag::W, n}; }
    static Generator C() { return {Tag::C, 0}; }

    bool is_central() const { return tag == Tag::C; }

    /// Z-grading: n for L_n and W_n, 0 for C.
    std::int64_t grade() const { return index; }

    std::string str() const;

    friend bool operator==(const Generator&, const Generator&) = default;

    /// PBW order (C, then index ascending, W before L).
    friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
        auto key = [](const Generator& g) {
            return std::tuple<int, std::int64_t, int>(g.is_central() ? 0 : 1, g.index,
                                                      g.tag == Tag::W ? 0 : 1);
        };
        return key(a) <=> key(b);
    }
};

/// Finite Scalar-linear combination of generators.
class LieElement {
public:
    LieElement() = default;
    LieElement(const Generator& g) { add(g, Scalar(1)); }

    void add(const Generator& g, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Generator& g) const;

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(const Scalar& c) const;
    bool operator==(const LieElement& o) const { return terms_ == o.terms_; }

    const std::map<Generator, Scalar>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Generator, Scalar> terms_;
};

/// Structure constants on basis generators.
LieElement bracket(const Generator& x, const Generator& y);

/// Bilinear extension.
LieElement bracket(const LieElement& x, const LieElement& y);

} // namespace w22
