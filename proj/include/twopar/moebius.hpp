#pragma once

#include "twopar/complex_value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twopar {

// Tolerance for floating-point parabolicity tests (|tr^2 - 4| < eps).
inline constexpr double kEpsParabolic = 1e-10;

// A point of the Riemann sphere.
struct SpherePoint {
    bool at_infinity = false;
    ComplexValue value; // meaningful iff !at_infinity

    static SpherePoint infinity() { return {true, ComplexValue()}; }
    static SpherePoint finite(ComplexValue v) { return {false, std::move(v)}; }

    bool near(const SpherePoint& other, double eps) const {
        if (at_infinity || other.at_infinity) return at_infinity == other.at_infinity;
        return value.near(other.value, eps);
    }
    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
        return a.value == b.value;
    }
};

enum class ElementClass { identity, parabolic, elliptic, loxodromic };
const char* to_string(ElementClass c);

// 2x2 complex matrix, determinant-1 convention.  The optional label records
// the generator word that built the matrix (alphabet S,s,T,t; s = S^-1).
struct MoebiusMatrix {
    ComplexValue a, b, c, d;
    std::optional<std::string> label;

    static MoebiusMatrix identity();

    ComplexValue det() const { return a * d - b * c; }
    std::complex<double> apply_cd(std::complex<double> z) const;
};

MoebiusMatrix compose(const MoebiusMatrix& m, const MoebiusMatrix& n);
MoebiusMatrix inverse(const MoebiusMatrix& m);
ComplexValue trace(const MoebiusMatrix& m);
MoebiusMatrix commutator(const MoebiusMatrix& a, const MoebiusMatrix& b);
MoebiusMatrix conjugate(const MoebiusMatrix& m, const MoebiusMatrix& c);
SpherePoint apply(const MoebiusMatrix& m, const SpherePoint& p);

// Roots of c z^2 + (d - a) z - b = 0 with the usual conventions at infinity.
// Parabolic elements yield exactly one point.  Throws IdentityElement on +/-I.
std::vector<SpherePoint> fixed_points(const MoebiusMatrix& m);

ElementClass classify_element(const MoebiusMatrix& m, double eps_par = kEpsParabolic);

bool matrices_equal(const MoebiusMatrix& m, const MoebiusMatrix& n);
bool matrices_near(const MoebiusMatrix& m, const MoebiusMatrix& n, double eps);

// Reverse the word and swap case: the label of the inverse element.
std::string inverse_word(const std::string& word);

} // namespace twopar
