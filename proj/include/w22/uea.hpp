#pragma once

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "w22/algebra.hpp"

namespace w22 {

/// Product of generators in the enveloping algebra; the leftmost factor is
/// applied last when the word acts on a module vector.
using Word = std::vector<Generator>;

/// Finite Scalar-linear combination of words.
class UeaElement {
public:
    UeaElement() = default;

    static UeaElement one() { return from_word(Word{}); }
    static UeaElement from_word(Word w);
    static UeaElement from_generator(const Generator& g) { return from_word({g}); }
    static UeaElement from_lie(const LieElement& x);

    void add(const Word& w, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Word& w) const;

    UeaElement operator+(const UeaElement& o) const;
    UeaElement operator-(const UeaElement& o) const;
    /// Concatenation product.
    UeaElement operator*(const UeaElement& o) const;
    UeaElement operator*(const Scalar& c) const;
    bool operator==(const UeaElement& o) const { return terms_ == o.terms_; }

    const std::map<Word, Scalar>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Word, Scalar> terms_;
};

/**
 * PBW normal form: rewrites xy -> yx + [x,y] on adjacent out-of-order pairs
 * until every word is non-decreasing in the generator order.  The memo table
 * is local to each call, so concurrent calls are safe.
 */
UeaElement straighten(const UeaElement& u);

/// True when the word is non-decreasing in the PBW generator order.
bool is_pbw_ordered(const Word& w);

/**
 * The Casimir-like element alpha^{-2} (W_0 W_0 - W_{-1} W_1).
 * Requires alpha != 0.
 */
UeaElement q_element(const Scalar& alpha);

/// Module over W(2,2): acts on vectors by generator, knows its zero vector,
/// and can tell whether a vector belongs to it.
template <class M>
concept WModule = requires(const M& m, const Generator& g, const typename M::Vector& v) {
    { m.act(g, v) } -> std::same_as<typename M::Vector>;
    { m.zero() } -> std::same_as<typename M::Vector>;
    { m.contains(v) } -> std::same_as<bool>;
};

/// Evaluate a UEA element on a module vector (rightmost generator first).
template <WModule M>
typename M::Vector apply(const UeaElement& u, const typename M::Vector& v, const M& mod) {
    if (!mod.contains(v))
        throw std::domain_error("apply: vector does not belong to the module");
    typename M::Vector result = mod.zero();
    for (const auto& [word, c] : u.terms()) {
        typename M::Vector cur = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = mod.act(*it, cur);
        result = result + cur * c;
    }
    return result;
}

} // namespace w22
