#include "twopar/moebius.hpp"

#include "twopar/errors.hpp"

#include <algorithm>
#include <cmath>

namespace twopar {

const char* to_string(ElementClass c) {
    switch (c) {
        case ElementClass::identity: return "identity";
        case ElementClass::parabolic: return "parabolic";
        case ElementClass::elliptic: return "elliptic";
        case ElementClass::loxodromic: return "loxodromic";
    }
    return "?";
}

MoebiusMatrix MoebiusMatrix::identity() {
    return {ComplexValue::exact(1), ComplexValue::exact(0),
            ComplexValue::exact(0), ComplexValue::exact(1), std::string()};
}

std::complex<double> MoebiusMatrix::apply_cd(std::complex<double> z) const {
    return (a.cd() * z + b.cd()) / (c.cd() * z + d.cd());
}

MoebiusMatrix compose(const MoebiusMatrix& m, const MoebiusMatrix& n) {
    MoebiusMatrix r;
    r.a = m.a * n.a + m.b * n.c;
    r.b = m.a * n.b + m.b * n.d;
    r.c = m.c * n.a + m.d * n.c;
    r.d = m.c * n.b + m.d * n.d;
    if (m.label && n.label) r.label = *m.label + *n.label;
    return r;
}

MoebiusMatrix inverse(const MoebiusMatrix& m) {
    MoebiusMatrix r{m.d, -m.b, -m.c, m.a, std::nullopt};
    if (m.label) r.label = inverse_word(*m.label);
    return r;
}

ComplexValue trace(const MoebiusMatrix& m) { return m.a + m.d; }

MoebiusMatrix commutator(const MoebiusMatrix& a, const MoebiusMatrix& b) {
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

MoebiusMatrix conjugate(const MoebiusMatrix& m, const MoebiusMatrix& c) {
    return compose(compose(c, m), inverse(c));
}

SpherePoint apply(const MoebiusMatrix& m, const SpherePoint& p) {
    if (p.at_infinity) {
        if (m.c.is_zero()) return SpherePoint::infinity();
        return SpherePoint::finite(m.a / m.c);
    }
    ComplexValue den = m.c * p.value + m.d;
    if (den.is_zero()) return SpherePoint::infinity();
    return SpherePoint::finite((m.a * p.value + m.b) / den);
}

namespace {

bool is_pm_identity(const MoebiusMatrix& m, double eps) {
    auto near_val = [eps](const ComplexValue& v, double target) {
        if (v.is_exact()) return v == ComplexValue::exact(static_cast<long>(target));
        return std::abs(v.cd() - std::complex<double>(target, 0)) <= eps;
    };
    bool plus = near_val(m.a, 1) && near_val(m.d, 1) && near_val(m.b, 0) && near_val(m.c, 0);
    bool minus = near_val(m.a, -1) && near_val(m.d, -1) && near_val(m.b, 0) && near_val(m.c, 0);
    return plus || minus;
}

// sqrt of a ComplexValue: exact when the Gaussian rational is a perfect
// square, floating (principal branch) otherwise.
ComplexValue sqrt_value(const ComplexValue& v) {
    if (v.is_exact()) {
        if (auto r = gaussian_sqrt(v.rat())) return ComplexValue::exact(*r);
    }
    return ComplexValue::floating(std::sqrt(v.cd()));
}

} // namespace

std::vector<SpherePoint> fixed_points(const MoebiusMatrix& m) {
    if (is_pm_identity(m, kEpsParabolic)) throw IdentityElement();

    ElementClass cls = classify_element(m);
    if (m.c.is_zero()) {
        // infinity is fixed; a second finite point exists unless parabolic
        if (cls == ElementClass::parabolic) return {SpherePoint::infinity()};
        return {SpherePoint::infinity(), SpherePoint::finite(m.b / (m.d - m.a))};
    }
    ComplexValue two = ComplexValue::exact(2);
    if (cls == ElementClass::parabolic) {
        return {SpherePoint::finite((m.a - m.d) / (two * m.c))};
    }
    ComplexValue tr = trace(m);
    ComplexValue s = sqrt_value(tr * tr - ComplexValue::exact(4));
    ComplexValue den = two * m.c;
    return {SpherePoint::finite((m.a - m.d + s) / den),
            SpherePoint::finite((m.a - m.d - s) / den)};
}

ElementClass classify_element(const MoebiusMatrix& m, double eps_par) {
    ComplexValue tr = trace(m);
    ComplexValue tr2 = tr * tr;
    if (tr2.is_exact()) {
        const GaussianRational& g = tr2.rat();
        if (g == GaussianRational{4, 0})
            return is_pm_identity(m, 0.0) ? ElementClass::identity : ElementClass::parabolic;
        if (g.is_real() && g.re >= 0 && g.re < 4) return ElementClass::elliptic;
        return ElementClass::loxodromic;
    }
    std::complex<double> t2 = tr2.cd();
    if (std::abs(t2 - std::complex<double>(4, 0)) < eps_par)
        return is_pm_identity(m, eps_par) ? ElementClass::identity : ElementClass::parabolic;
    if (std::abs(t2.imag()) < eps_par && t2.real() > -eps_par && t2.real() < 4)
        return ElementClass::elliptic;
    return ElementClass::loxodromic;
}

bool matrices_equal(const MoebiusMatrix& m, const MoebiusMatrix& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

bool matrices_near(const MoebiusMatrix& m, const MoebiusMatrix& n, double eps) {
    return std::abs(m.a.cd() - n.a.cd()) <= eps && std::abs(m.b.cd() - n.b.cd()) <= eps &&
           std::abs(m.c.cd() - n.c.cd()) <= eps && std::abs(m.d.cd() - n.d.cd()) <= eps;
}

std::string inverse_word(const std::string& word) {
    std::string out(word.rbegin(), word.rend());
    for (char& c : out) {
        if (std::isupper(static_cast<unsigned char>(c)))
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace twopar
