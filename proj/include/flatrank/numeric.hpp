#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace flatrank {

using Int = mpz_class;
using Rational = mpq_class;

// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// a * (a-1) * ... * (a-b+1); the coefficient picked up by b-fold differentiation of x^a.
inline Int falling_factorial(long a, long b) {
    Int r(1);
    for (long i = 0; i < b; ++i) r *= (a - i);
    return r;
}

inline std::size_t hash_int(const Int& z) {
    // Residues mod two fixed primes plus the sign; cheap and stable.
    unsigned long a = mpz_fdiv_ui(z.get_mpz_t(), 0x1fffffffffffffffUL);  // 2^61 - 1
    unsigned long b = mpz_fdiv_ui(z.get_mpz_t(), 4294967291UL);
    std::size_t h = a * 0x9e3779b97f4a7c15UL ^ (b + 0x517cc1b727220a95UL);
    if (sgn(z) < 0) h = ~h;
    return h;
}

inline std::size_t hash_rational(const Rational& q) {
    std::size_t h = hash_int(q.get_num());
    h ^= hash_int(q.get_den()) + 0x9e3779b97f4a7c15UL + (h << 6) + (h >> 2);
    return h;
}

// Element of Q(i); keeps the arithmetic for the complex specialization matrices exact.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Coefficient-ring hooks used by the polynomial template.
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline Rational coeff_scale(const Rational& c, const Int& f) { return c * Rational(f); }
inline GaussianRational coeff_scale(const GaussianRational& c, const Int& f) {
    Rational r(f);
    return {c.re * r, c.im * r};
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace flatrank
