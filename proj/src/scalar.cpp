#include "w22/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace w22 {

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::domain_error("Scalar::fraction: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
    return Scalar(re, im);
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        neg = (num[0] == '-');
        num.remove_prefix(1);
    }
    if (!digits(num) || !digits(den))
        return std::nullopt;
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        return std::nullopt;
    if (neg)
        n = -n;
    return fraction(n, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("Scalar::inverse: division by zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

std::string Scalar::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im_ == 0)
        return rat(re_);
    std::string s = rat(re_);
    s += (im_ < 0) ? "-" : "+";
    mpq_class a = abs(im_);
    if (a != 1)
        s += rat(a) + "*";
    s += "i";
    return s;
}

int Scalar::order(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0)
        return c < 0 ? -1 : 1;
    c = cmp(a.im_, b.im_);
    return c == 0 ? 0 : (c < 0 ? -1 : 1);
}

Scalar pow(const Scalar& x, std::int64_t n) {
    if (n == 0)
        return Scalar(1); // 0^0 = 1 by convention
    if (n < 0)
        return pow(x.inverse(), -n);
    // square-and-multiply
    Scalar base = x, acc(1);
    std::uint64_t e = static_cast<std::uint64_t>(n);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

Scalar binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0)
        return Scalar(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

Scalar factorial(std::int64_t n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(r);
}

} // namespace w22
