#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace twopar {

// Exact complex number with rational real and imaginary parts.
// mpq_class keeps every value canonical (reduced, positive denominator).
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |z|^2, always rational
    mpq_class norm() const { return re * re + im * im; }

    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// sqrt of a nonnegative rational, when it is rational.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// Principal square root of a Gaussian rational, when it exists exactly:
// the root with re > 0, or re == 0 and im >= 0.
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

std::string to_string(const mpq_class& q);
std::string to_string(const GaussianRational& z);

} // namespace twopar
