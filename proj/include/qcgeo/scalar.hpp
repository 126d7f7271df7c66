#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcgeo {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest terms
/// with a positive denominator; values built from raw parts go through
/// `make_rational`, which canonicalizes.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

/// Accepts "p" or "p/q" with optional leading sign; rejects zero denominators,
/// decimals, and whitespace.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_canonical(const Rational& q);

/// a + b i with rational parts.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit lift from the reals
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r) {}  // NOLINT

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        Rational norm = b.re * b.re + b.im * b.im;
        if (norm == 0) throw std::domain_error("Gaussian division by zero");
        return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
    }
    Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
    Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
    Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    Gaussian conj() const { return {re, -im}; }
};

std::string to_string(const Gaussian& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

}  // namespace qcgeo
