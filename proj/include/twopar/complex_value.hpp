#pragma once

#include "twopar/rational.hpp"

#include <complex>
#include <string>
#include <variant>

namespace twopar {

// A complex scalar in dual representation: exact Gaussian rational when
// constructible, IEEE double otherwise.  Arithmetic between two exact
// values stays exact; anything touching a floating value yields floating.
// There is no implicit floating -> exact conversion.
class ComplexValue {
public:
    ComplexValue() : v_(GaussianRational{}) {}

    static ComplexValue exact(GaussianRational g) {
        g.re.canonicalize();
        g.im.canonicalize();
        return ComplexValue(std::move(g));
    }
    static ComplexValue exact(mpq_class re, mpq_class im) {
        return exact(GaussianRational{std::move(re), std::move(im)});
    }
    static ComplexValue exact(long re, long im = 0) { return ComplexValue(GaussianRational{re, im}); }
    static ComplexValue floating(double re, double im = 0.0) {
        return ComplexValue(std::complex<double>(re, im));
    }
    static ComplexValue floating(std::complex<double> z) { return ComplexValue(z); }

    bool is_exact() const { return std::holds_alternative<GaussianRational>(v_); }
    const GaussianRational& rat() const { return std::get<GaussianRational>(v_); }

    std::complex<double> cd() const {
        if (is_exact()) {
            const auto& g = rat();
            return {g.re.get_d(), g.im.get_d()};
        }
        return std::get<std::complex<double>>(v_);
    }

    double re() const { return cd().real(); }
    double im() const { return cd().imag(); }
    double abs() const { return std::abs(cd()); }

    bool is_zero() const { return is_exact() ? rat().is_zero() : cd() == std::complex<double>(0.0, 0.0); }
    bool is_real() const { return is_exact() ? rat().is_real() : cd().imag() == 0.0; }

    ComplexValue conj() const {
        if (is_exact()) return exact(rat().conj());
        return floating(std::conj(cd()));
    }

    // |z|^2 in the same mode as z
    ComplexValue norm_sq() const {
        if (is_exact()) return exact(rat().norm(), 0);
        return floating(std::norm(cd()), 0.0);
    }

    friend ComplexValue operator-(const ComplexValue& a) {
        if (a.is_exact()) return exact(-a.rat());
        return floating(-a.cd());
    }
    friend ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
        if (a.is_exact() && b.is_exact()) return exact(a.rat() + b.rat());
        return floating(a.cd() + b.cd());
    }
    friend ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
        if (a.is_exact() && b.is_exact()) return exact(a.rat() - b.rat());
        return floating(a.cd() - b.cd());
    }
    friend ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
        if (a.is_exact() && b.is_exact()) return exact(a.rat() * b.rat());
        return floating(a.cd() * b.cd());
    }
    friend ComplexValue operator/(const ComplexValue& a, const ComplexValue& b) {
        if (a.is_exact() && b.is_exact()) return exact(a.rat() / b.rat());
        return floating(a.cd() / b.cd());
    }

    // Exact equality in exact mode, bitwise double equality otherwise.
    friend bool operator==(const ComplexValue& a, const ComplexValue& b) {
        if (a.is_exact() && b.is_exact()) return a.rat() == b.rat();
        return a.cd() == b.cd();
    }
    friend bool operator!=(const ComplexValue& a, const ComplexValue& b) { return !(a == b); }

    bool near(const ComplexValue& other, double eps) const {
        return std::abs(cd() - other.cd()) <= eps;
    }

    std::string str() const;

private:
    explicit ComplexValue(GaussianRational g) : v_(std::move(g)) {}
    explicit ComplexValue(std::complex<double> z) : v_(z) {}

    std::variant<GaussianRational, std::complex<double>> v_;
};

struct ParsedComplex {
    ComplexValue value;
    bool had_decimal = false; // true when decimal/polar input forced floating mode
};

// Accepted forms: "a/b+c/d i" rationals, "x+yi" decimals, "r@theta" polar,
// plus the obvious degenerate cases ("i", "-i", "2i", "3", "1/2-1/2i").
ParsedComplex parse_complex(const std::string& text);

} // namespace twopar
