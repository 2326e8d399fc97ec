#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace w22 {

/**
 * Scalar: an exact Gaussian rational re + im*i with arbitrary-precision
 * rational components.  The imaginary part defaults to zero, so plain
 * module parameters stay in Q; it exists so parameters like lambda = i
 * can be exercised without changing any downstream code.
 *
 * Components are always kept canonical (reduced, positive denominator);
 * equality is structural.  No floating point anywhere.
 */
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpz_class& n) : re_(n), im_(0) {}
    explicit Scalar(const mpq_class& q) : re_(q), im_(0) { canonicalize(); }

    /// num/den as an exact rational; den must be nonzero.
    static Scalar fraction(const mpz_class& num, const mpz_class& den);
    static Scalar gaussian(const mpq_class& re, const mpq_class& im);

    /// Imaginary unit, for tests of the Gaussian mode.
    static Scalar i() { return gaussian(0, 1); }

    /// Accepts "p", "-p", "p/q" with arbitrary-precision digits; no floats,
    /// no whitespace.  Returns nullopt on malformed input.
    static std::optional<Scalar> parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }
    bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    /// Multiplicative inverse; zero is a domain error.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "p/q" (or "p") when rational, "re+im*i" otherwise.
    std::string str() const;

    /// Total order used only for canonical sorting of records and map keys
    /// (Gaussian rationals carry no semantic order).  -1 / 0 / +1.
    static int order(const Scalar& a, const Scalar& b);

private:
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }
    void canonicalize() { re_.canonicalize(); im_.canonicalize(); }

    mpq_class re_, im_;
};

/// x^n for integer n; 0^0 = 1, negative powers of zero are a domain error.
Scalar pow(const Scalar& x, std::int64_t n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Scalar binomial(std::int64_t n, std::int64_t k);

/// Exact factorial as a Scalar (n >= 0).
Scalar factorial(std::int64_t n);

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

} // namespace w22
