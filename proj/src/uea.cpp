#include "w22/uea.hpp"

#include <sstream>

namespace w22 {

UeaElement UeaElement::from_word(Word w) {
    UeaElement u;
    u.terms_[std::move(w)] = Scalar(1);
    return u;
}

UeaElement UeaElement::from_lie(const LieElement& x) {
    UeaElement u;
    for (const auto& [g, c] : x.terms())
        u.terms_[Word{g}] = c;
    return u;
}

void UeaElement::add(const Word& w, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar UeaElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

UeaElement UeaElement::operator+(const UeaElement& o) const {
    UeaElement r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add(w, c);
    return r;
}

UeaElement UeaElement::operator-(const UeaElement& o) const {
    UeaElement r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add(w, -c);
    return r;
}

UeaElement UeaElement::operator*(const UeaElement& o) const {
    UeaElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

UeaElement UeaElement::operator*(const Scalar& c) const {
    UeaElement r;
    if (c.is_zero())
        return r;
    for (const auto& [w, k] : terms_)
        r.terms_[w] = k * c;
    return r;
}

std::string UeaElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (const auto& g : w)
            out << "*" << g.str();
        if (w.empty())
            out << "*1";
    }
    return out.str();
}

bool is_pbw_ordered(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            return false;
    return true;
}

namespace {

const UeaElement& straighten_word(const Word& w, std::map<Word, UeaElement>& memo) {
    if (auto it = memo.find(w); it != memo.end())
        return it->second;
    std::size_t inv = w.size();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) {
            inv = k;
            break;
        }
    UeaElement result;
    if (inv == w.size()) {
        result = UeaElement::from_word(w);
    } else {
        // x y -> y x + [x, y]; the swap lowers the inversion count, the
        // bracket shortens the word, so the rewriting terminates.
        Word swapped = w;
        std::swap(swapped[inv], swapped[inv + 1]);
        result = straighten_word(swapped, memo);
        LieElement correction = bracket(w[inv], w[inv + 1]);
        for (const auto& [g, c] : correction.terms()) {
            Word contracted(w.begin(), w.begin() + inv);
            contracted.push_back(g);
            contracted.insert(contracted.end(), w.begin() + inv + 2, w.end());
            result = result + straighten_word(contracted, memo) * c;
        }
    }
    return memo.emplace(w, std::move(result)).first->second;
}

} // namespace

UeaElement straighten(const UeaElement& u) {
    std::map<Word, UeaElement> memo;
    UeaElement r;
    for (const auto& [w, c] : u.terms())
        r = r + straighten_word(w, memo) * c;
    return r;
}

UeaElement q_element(const Scalar& alpha) {
    if (alpha.is_zero())
        throw std::domain_error("q_element: alpha must be nonzero");
    Scalar a2 = pow(alpha, -2);
    UeaElement q;
    q.add(Word{Generator::W(0), Generator::W(0)}, a2);
    q.add(Word{Generator::W(-1), Generator::W(1)}, -a2);
    return q;
}

} // namespace w22
