#include <doctest.h>

#include "twopar/curves.hpp"
#include "twopar/dynamics.hpp"
#include "twopar/errors.hpp"

#include <cmath>
#include <complex>

using namespace twopar;

namespace {
using Cx = std::complex<double>;
Cx fmap(Cx z) { return -2.0 * z * z; }
} // namespace

TEST_CASE("diagonal line images land on the stated parabola") {
    for (double c : {1.0, -1.0, 0.5, 3.0}) {
        PlaneCurve pc = image_of_diag_line(c, 256);
        CHECK(pc.samples.size() == 256);
        CHECK(pc.max_sample_residual() < 1e-9);
        // residual against the closed form y = -c^2 + x^2/(4c^2)
        for (const auto& s : pc.samples)
            CHECK(std::abs(s[1] - (-c * c + s[0] * s[0] / (4.0 * c * c))) < 1e-9);
    }
    // c = 1 and c = -1 give the same parabola
    PlaneCurve a = image_of_diag_line(1.0), b = image_of_diag_line(-1.0);
    CHECK(a.coeffs == b.coeffs);
    CHECK_THROWS_AS(image_of_diag_line(0.0), ZeroOffset);
    // f(0.3 + 0.7i) lies on the c = 1 parabola
    Cx w = fmap(Cx(0.3, 0.7));
    CHECK(std::abs(image_of_diag_line(1.0).residual_at(w.real(), w.imag())) < 1e-12);
}

TEST_CASE("diagonal image at |c| = 1 coincides with a schottky parabola") {
    PlaneCurve img = image_of_diag_line(1.0);
    auto arcs = schottky_parabolas(64);
    // the image of x + y = 1 is the lower arc y = -(1 - x^2/4)
    for (const auto& s : img.samples) CHECK(std::abs(arcs[1].residual_at(s[0], s[1])) < 1e-9);
}

TEST_CASE("vertical and horizontal line images") {
    for (double c : {1.0, -1.0, 0.5, 3.0}) {
        PlaneCurve v = image_of_vertical_line(c, 256);
        CHECK(v.max_sample_residual() < 1e-9);
        PlaneCurve h = image_of_horizontal_line(c, 256);
        CHECK(h.max_sample_residual() < 1e-9);
    }
    // the vertex of the vertical image sits at (-2c^2, 0)
    PlaneCurve v = image_of_vertical_line(0.5);
    CHECK(std::abs(v.residual_at(-0.5, 0.0)) < 1e-12);
    // f(i) = 2 lies on the image of the horizontal line y = 1
    PlaneCurve h = image_of_horizontal_line(1.0);
    CHECK(std::abs(h.residual_at(2.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(image_of_vertical_line(0.0), ZeroOffset);
}

TEST_CASE("line preimages pull back onto the line") {
    std::vector<std::pair<double, double>> lines = {{1.0, 1.0}, {-0.5, 2.0}, {2.0, -1.0}};
    for (auto [m, b] : lines) {
        PlaneCurve pc = preimage_of_line(m, b, -4.0, 4.0, 128);
        CHECK(pc.max_sample_residual() < 1e-9);
        for (const auto& s : pc.samples) {
            Cx w = fmap(Cx(s[0], s[1]));
            CHECK(std::abs(w.imag() - (m * w.real() + b)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(preimage_of_line(0.0, 1.0), DegenerateLine);
    CHECK_THROWS_AS(preimage_of_line(1.0, 0.0), DegenerateLine);
}

TEST_CASE("K-line preimage geometry") {
    const double s3 = std::sqrt(3.0);
    double m = -s3 / 3.0, b = 2.0 * s3 / 3.0;
    PlaneCurve pc = preimage_of_line(m, b, 0.5, 2.0, 256);
    // forward residual: every sample maps back onto the K-line segment
    for (const auto& s : pc.samples) {
        Cx w = fmap(Cx(s[0], s[1]));
        CHECK(std::abs(w.imag() - (m * w.real() + b)) < 1e-9);
        CHECK(w.real() > 0.5 - 1e-6);
        CHECK(w.real() < 2.0 + 1e-6);
    }
    // the samples satisfy the derived conic x^2 + 2 sqrt(3) xy - y^2 = -1
    for (const auto& s : pc.samples) {
        double r = s[0] * s[0] + 2.0 * s3 * s[0] * s[1] - s[1] * s[1] + 1.0;
        CHECK(std::abs(r) < 1e-9);
    }
    // endpoints: the preimages of z = 2 are +/-i
    auto ends = f_preimages(ComplexValue::exact(2));
    CHECK(ends[0] == ComplexValue::exact(mpq_class(0), mpq_class(1)));
}

TEST_CASE("lines through the origin double their angle") {
    CHECK(line_through_origin_image(0.0) == 0.0);
    CHECK(std::abs(line_through_origin_image(M_PI / 6.0) - M_PI / 3.0) < 1e-15);
    CHECK(std::abs(line_through_origin_image(M_PI / 3.0) - 2.0 * M_PI / 3.0) < 1e-15);
    // as unoriented lines, the image ray at angle 2 theta + pi is the same line
    double th = 0.37;
    Cx z = std::polar(1.3, th);
    Cx w = fmap(z);
    double lw = std::fmod(std::arg(w) + 2.0 * M_PI, M_PI);
    double expect = std::fmod(line_through_origin_image(th), M_PI);
    CHECK(std::abs(lw - expect) < 1e-12);
}

TEST_CASE("schottky parabolas") {
    auto arcs = schottky_parabolas(101);
    CHECK(arcs[0].samples.front()[0] == -2.0);
    CHECK(arcs[0].samples.back()[0] == 2.0);
    CHECK(std::abs(arcs[0].residual_at(0.0, 1.0)) < 1e-15);  // i on the upper arc
    CHECK(std::abs(arcs[1].residual_at(0.0, -1.0)) < 1e-15); // -i on the lower arc
    CHECK(std::abs(arcs[0].residual_at(1.0, 0.75)) < 1e-15); // midpoint
    CHECK(std::abs(arcs[0].residual_at(2.0, 0.0)) < 1e-15);  // endpoint
    CHECK_THROWS_AS(schottky_parabolas(1), BadSampleCount);
}

TEST_CASE("boundary_nth: the diamond at depth one") {
    auto curves = boundary_nth(1, 64);
    REQUIRE(curves.size() == 4);
    // vertices +/-1, +/-i appear as segment endpoints
    bool has_one = false, has_i = false;
    for (const auto& c : curves) {
        for (const auto& s : {c.samples.front(), c.samples.back()}) {
            if (std::abs(s[0] - 1.0) < 1e-15 && std::abs(s[1]) < 1e-15) has_one = true;
            if (std::abs(s[0]) < 1e-15 && std::abs(s[1] - 1.0) < 1e-15) has_i = true;
        }
        // every sample satisfies |x| + |y| = 1
        for (const auto& s : c.samples) CHECK(std::abs(std::abs(s[0]) + std::abs(s[1]) - 1.0) < 1e-12);
    }
    CHECK(has_one);
    CHECK(has_i);
    // (1 - i)/2 lies on the diamond
    double best = 1e9;
    for (const auto& c : curves)
        for (const auto& s : c.samples) best = std::min(best, std::hypot(s[0] - 0.5, s[1] + 0.5));
    CHECK(best < 0.05);
}

TEST_CASE("boundary_nth: eight hyperbola branches at depth two") {
    auto curves = boundary_nth(2, 512);
    REQUIRE(curves.size() == 8);
    for (const auto& c : curves) {
        CHECK(c.kind == CurveKind::hyperbola_branch);
        // every sample satisfies one of the four sign combinations
        for (const auto& s : c.samples) {
            double x = s[0], y = s[1];
            double best = 1e9;
            for (int s1 : {+1, -1})
                for (int s2 : {+1, -1})
                    best = std::min(best,
                                    std::abs(-2.0 * (x + s1 * y) * (x + s1 * y) + 4.0 * y * y - s2));
            CHECK(best < 1e-9);
        }
        // assigned conic fits all samples
        CHECK(c.max_sample_residual() < 1e-9);
        // branch ends lie on the circle of radius t_1
        for (const auto& s : {c.samples.front(), c.samples.back()})
            CHECK(std::abs(std::hypot(s[0], s[1]) - t_radius(1)) < 1e-9);
    }
}

TEST_CASE("boundary_nth: deeper pullbacks keep the forward residual") {
    for (int n : {3, 4}) {
        auto curves = boundary_nth(n, 64);
        CHECK(curves.size() == static_cast<std::size_t>(2 << n));
        for (const auto& c : curves) {
            for (const auto& s : c.samples) {
                Cx z(s[0], s[1]);
                for (int k = 0; k < n; ++k) z = fmap(z);
                // lands on one of the two parabola arcs
                double r = std::min(std::abs(z.imag() - (1.0 - z.real() * z.real() / 4.0)),
                                    std::abs(z.imag() + (1.0 - z.real() * z.real() / 4.0)));
                CHECK(r < 1e-9);
            }
            for (const auto& s : {c.samples.front(), c.samples.back()})
                CHECK(std::abs(std::hypot(s[0], s[1]) - t_radius(n - 1)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(boundary_nth(13), DepthExceeded);
}

TEST_CASE("named boundaries") {
    CurveSet cs = named_boundaries(64);
    const PlaneCurve* jorg = nullptr;
    const PlaneCurve* nsdc = nullptr;
    const PlaneCurve* k0 = nullptr;
    for (const auto& c : cs.curves) {
        if (c.name == "jorgensen_circle") jorg = &c;
        if (c.name == "nsdc_parabola_right") nsdc = &c;
        if (c.name == "ncf_k0") k0 = &c;
    }
    REQUIRE(jorg);
    CHECK(jorg->coeffs[2] == 0.5);
    REQUIRE(nsdc);
    CHECK(std::abs(nsdc->residual_at(0.0, 4.0)) < 1e-12); // passes (0, 4)
    CHECK(std::abs(nsdc->residual_at(2.0, 0.0)) < 1e-12);
    REQUIRE(k0);
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(k0->samples.front()[0] - 0.5) < 1e-12);
    CHECK(std::abs(k0->samples.front()[1] - s3 / 2.0) < 1e-12);
    CHECK(std::abs(k0->samples.back()[0] - 2.0) < 1e-12);
    CHECK(std::abs(k0->samples.back()[1]) < 1e-12);
    // tessellation circles present
    int tess = 0;
    for (const auto& c : cs.curves)
        if (c.name.rfind("C_{t_", 0) == 0) ++tess;
    CHECK(tess == 8); // n = -1..6
}

TEST_CASE("nsdc boundary from iteration matches the closed form") {
    auto arcs = nsdc_from_iteration(256);
    for (const auto& pc : arcs) {
        CHECK(pc.max_sample_residual() < 1e-9);
        for (const auto& s : pc.samples)
            CHECK(std::abs(s[1] * s[1] - (16.0 - 8.0 * std::abs(s[0]))) < 1e-9);
    }
    // the square corner (1/2, 1/2) maps to (0, 4)
    Cx corner = -4.0 * fmap(Cx(0.5, 0.5));
    CHECK(std::abs(corner - Cx(0.0, 4.0)) < 1e-12);
    // the side midpoint (1/2, 0) maps to the vertex (2, 0)
    Cx mid = -4.0 * fmap(Cx(0.5, 0.0));
    CHECK(std::abs(mid - Cx(2.0, 0.0)) < 1e-12);
}
