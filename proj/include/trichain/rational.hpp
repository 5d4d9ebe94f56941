/*
 * rational.hpp
 * Exact arbitrary-precision rationals (GMP-backed) and Gaussian rationals.
 */
#ifndef TRICHAIN_RATIONAL_HPP
#define TRICHAIN_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace trichain {

using Integer  = mpz_class;
// mpq_class keeps the spec invariants automatically: gcd(|num|, den) = 1,
// den > 0, zero canonical as 0/1.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

std::string to_string(const Rational& q);          // "p/q", or "p" when q = 1
Rational rational_from_string(const std::string& s); // accepts "p", "p/q", signs

/// Element of Q(i); exact component-wise arithmetic.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

std::string to_string(const GaussianRational& z);            // "a", "bi", "a+bi", "a-bi"
GaussianRational gaussian_from_string(const std::string& s); // throws std::invalid_argument

} // namespace trichain

#endif
