#include "twopar/curves.hpp"

#include "twopar/dynamics.hpp"
#include "twopar/errors.hpp"

#include <cmath>
#include <complex>

namespace twopar {

const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::parabola: return "parabola";
        case CurveKind::hyperbola_branch: return "hyperbola_branch";
        case CurveKind::line_segment: return "line_segment";
        case CurveKind::circle: return "circle";
        case CurveKind::arc: return "arc";
        case CurveKind::polyline: return "polyline";
    }
    return "?";
}

double PlaneCurve::residual_at(double x, double y) const {
    switch (kind) {
        case CurveKind::parabola: {
            double axis = coeffs[0], A = coeffs[1], B = coeffs[2];
            return axis == 0.0 ? y - (A + B * x * x) : x - (A + B * y * y);
        }
        case CurveKind::hyperbola_branch: {
            const auto& c = coeffs;
            return c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x + c[4] * y + c[5];
        }
        case CurveKind::line_segment:
            return coeffs[0] * x + coeffs[1] * y - coeffs[2];
        case CurveKind::circle:
        case CurveKind::arc: {
            double dx = x - coeffs[0], dy = y - coeffs[1];
            return std::hypot(dx, dy) - coeffs[2];
        }
        case CurveKind::polyline:
            return 0.0;
    }
    return 0.0;
}

double PlaneCurve::max_sample_residual() const {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, std::abs(residual_at(s[0], s[1])));
    return m;
}

namespace {

using C = std::complex<double>;

C fmap(C z) { return -2.0 * z * z; }

void require_samples(int n) {
    if (n < 2) throw BadSampleCount("need at least 2 samples per arc");
}

PlaneCurve line_segment_curve(C a, C b, const std::string& name, int samples) {
    PlaneCurve pc;
    pc.kind = CurveKind::line_segment;
    pc.name = name;
    C d = b - a;
    double len = std::abs(d);
    C n(-d.imag() / len, d.real() / len);
    pc.coeffs = {n.real(), n.imag(), n.real() * a.real() + n.imag() * a.imag()};
    for (int i = 0; i < samples; ++i) {
        double t = static_cast<double>(i) / (samples - 1);
        C z = a + t * d;
        pc.samples.push_back({z.real(), z.imag()});
    }
    return pc;
}

PlaneCurve circle_curve(C center, double r, const std::string& name, int samples,
                        double th0 = 0.0, double th1 = 2.0 * M_PI, bool arc = false) {
    PlaneCurve pc;
    pc.kind = arc ? CurveKind::arc : CurveKind::circle;
    pc.name = name;
    pc.coeffs = {center.real(), center.imag(), r};
    for (int i = 0; i < samples; ++i) {
        double t = th0 + (th1 - th0) * static_cast<double>(i) / (samples - 1);
        pc.samples.push_back({center.real() + r * std::cos(t), center.imag() + r * std::sin(t)});
    }
    return pc;
}

} // namespace

PlaneCurve image_of_diag_line(double c, int samples) {
    if (c == 0.0) throw ZeroOffset();
    require_samples(samples);
    PlaneCurve pc;
    pc.kind = CurveKind::parabola;
    pc.name = "f(x+y=" + std::to_string(c) + ")";
    pc.coeffs = {0.0, -c * c, 1.0 / (4.0 * c * c)};
    // image x~ = 2c^2 - 4ct covers [-2, 2] for t in the solved range
    double t0 = (2.0 * c * c - 2.0) / (4.0 * c);
    double t1 = (2.0 * c * c + 2.0) / (4.0 * c);
    if (t0 > t1) std::swap(t0, t1);
    for (int i = 0; i < samples; ++i) {
        double t = t0 + (t1 - t0) * static_cast<double>(i) / (samples - 1);
        C z = fmap(C(t, c - t));
        pc.samples.push_back({z.real(), z.imag()});
    }
    return pc;
}

PlaneCurve image_of_vertical_line(double c, int samples) {
    if (c == 0.0) throw ZeroOffset();
    require_samples(samples);
    PlaneCurve pc;
    pc.kind = CurveKind::parabola;
    pc.name = "f(x=" + std::to_string(c) + ")";
    pc.coeffs = {1.0, -2.0 * c * c, 1.0 / (8.0 * c * c)};
    for (int i = 0; i < samples; ++i) {
        double t = -std::abs(c) + 2.0 * std::abs(c) * static_cast<double>(i) / (samples - 1);
        C z = fmap(C(c, t));
        pc.samples.push_back({z.real(), z.imag()});
    }
    return pc;
}

PlaneCurve image_of_horizontal_line(double c, int samples) {
    if (c == 0.0) throw ZeroOffset();
    require_samples(samples);
    PlaneCurve pc;
    pc.kind = CurveKind::parabola;
    pc.name = "f(y=" + std::to_string(c) + ")";
    pc.coeffs = {1.0, 2.0 * c * c, -1.0 / (8.0 * c * c)};
    for (int i = 0; i < samples; ++i) {
        double t = -std::abs(c) + 2.0 * std::abs(c) * static_cast<double>(i) / (samples - 1);
        C z = fmap(C(t, c));
        pc.samples.push_back({z.real(), z.imag()});
    }
    return pc;
}

PlaneCurve preimage_of_line(double m, double b, double x_lo, double x_hi, int samples) {
    if (m == 0.0 || b == 0.0)
        throw DegenerateLine("use the axis/diamond operations for m = 0 or b = 0");
    require_samples(samples);
    PlaneCurve pc;
    pc.kind = CurveKind::hyperbola_branch;
    pc.name = "f^-1(y=" + std::to_string(m) + "x+" + std::to_string(b) + ")";
    // x^2 - (2/m) xy - y^2 - b/(2m) = 0
    pc.coeffs = {1.0, -2.0 / m, -1.0, 0.0, 0.0, -b / (2.0 * m)};
    for (int branch = 0; branch < 2; ++branch) {
        for (int i = 0; i < samples; ++i) {
            double x = x_lo + (x_hi - x_lo) * static_cast<double>(i) / (samples - 1);
            C w(x, m * x + b);
            C r = std::sqrt(-w / 2.0);
            C z = branch == 0 ? r : -r;
            pc.samples.push_back({z.real(), z.imag()});
        }
    }
    return pc;
}

double line_through_origin_image(double theta) {
    double t = std::fmod(2.0 * theta, 2.0 * M_PI);
    if (t < 0) t += 2.0 * M_PI;
    return t;
}

std::array<PlaneCurve, 2> schottky_parabolas(int samples_per_arc) {
    require_samples(samples_per_arc);
    std::array<PlaneCurve, 2> arcs;
    for (int k = 0; k < 2; ++k) {
        double sign = k == 0 ? 1.0 : -1.0;
        PlaneCurve& pc = arcs[k];
        pc.kind = CurveKind::parabola;
        pc.name = k == 0 ? "schottky_parabola_upper" : "schottky_parabola_lower";
        pc.coeffs = {0.0, sign * 1.0, -sign * 0.25};
        for (int i = 0; i < samples_per_arc; ++i) {
            double x = -2.0 + 4.0 * static_cast<double>(i) / (samples_per_arc - 1);
            pc.samples.push_back({x, sign * (1.0 - x * x / 4.0)});
        }
    }
    return arcs;
}

std::vector<PlaneCurve> boundary_nth(int n, int samples, int depth_cap) {
    if (n < 0) throw BadIndex("preimage depth must be >= 0");
    if (n > depth_cap)
        throw DepthExceeded("preimage depth " + std::to_string(n) + " exceeds cap " +
                            std::to_string(depth_cap));
    require_samples(samples);
    std::vector<PlaneCurve> out;
    if (n == 0) {
        auto arcs = schottky_parabolas(samples);
        out.push_back(arcs[0]);
        out.push_back(arcs[1]);
        return out;
    }
    if (n == 1) {
        // the diamond with vertices +/-1, +/-i
        const C v[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
        for (int k = 0; k < 4; ++k) {
            out.push_back(line_segment_curve(v[k], v[(k + 1) % 4],
                                             "diamond_side_" + std::to_string(k), samples));
        }
        return out;
    }
    // Pull each parabola sample back n times; branch sign sequences are the
    // bits of the branch index (level order: bit j chooses the root at the
    // j-th pullback).
    auto arcs = schottky_parabolas(samples);
    for (int a = 0; a < 2; ++a) {
        for (int branch = 0; branch < (1 << n); ++branch) {
            PlaneCurve pc;
            pc.kind = n == 2 ? CurveKind::hyperbola_branch : CurveKind::polyline;
            pc.name = "f^-" + std::to_string(n) + "(P) arc " + std::to_string(a) + " branch " +
                      std::to_string(branch);
            if (n == 2) {
                // one of (x -/+ y)^2 and y^2 combinations; coefficients found
                // from the residual of the first pulled-back point
                pc.coeffs = {0, 0, 0, 0, 0, 0};
            }
            for (const auto& s : arcs[a].samples) {
                C z(s[0], s[1]);
                for (int j = 0; j < n; ++j) {
                    C r = std::sqrt(-z / 2.0);
                    z = ((branch >> j) & 1) ? -r : r;
                }
                pc.samples.push_back({z.real(), z.imag()});
            }
            if (n == 2) {
                // identify which of the four sign combinations this branch
                // satisfies: -2(x + s1 y)^2 + 4 y^2 = s2
                double x = pc.samples[samples / 2][0], y = pc.samples[samples / 2][1];
                double best = 1e9;
                for (int s1 : {+1, -1}) {
                    for (int s2 : {+1, -1}) {
                        double r = -2.0 * (x + s1 * y) * (x + s1 * y) + 4.0 * y * y - s2;
                        if (std::abs(r) < best) {
                            best = std::abs(r);
                            // expand -2x^2 - 4 s1 xy - 2y^2 + 4y^2 - s2
                            pc.coeffs = {-2.0, -4.0 * s1, 2.0, 0.0, 0.0, static_cast<double>(-s2)};
                        }
                    }
                }
            }
            out.push_back(std::move(pc));
        }
    }
    return out;
}

CurveSet named_boundaries(int samples, int tess_lo, int tess_hi) {
    CurveSet cs;
    cs.curves.push_back(circle_curve(C(0, 0), 0.5, "jorgensen_circle", samples));

    auto arcs = schottky_parabolas(samples);
    cs.curves.push_back(arcs[0]);
    cs.curves.push_back(arcs[1]);

    // NSDC boundary y^2 = 16 - 8|x|: right arc x = 2 - y^2/8, left its mirror
    for (int k = 0; k < 2; ++k) {
        double sign = k == 0 ? 1.0 : -1.0;
        PlaneCurve pc;
        pc.kind = CurveKind::parabola;
        pc.name = k == 0 ? "nsdc_parabola_right" : "nsdc_parabola_left";
        pc.coeffs = {1.0, sign * 2.0, -sign * 0.125};
        for (int i = 0; i < samples; ++i) {
            double y = -4.0 + 8.0 * static_cast<double>(i) / (samples - 1);
            pc.samples.push_back({sign * (2.0 - y * y / 8.0), y});
        }
        cs.curves.push_back(std::move(pc));
    }

    // NCF boundary in the first quadrant and its three reflected copies:
    // the K-line segment K0, the unit-circle arc, and the parabola arc.
    const double sqrt3 = std::sqrt(3.0);
    const C tangency(0.5, sqrt3 / 2.0);
    for (int sx : {+1, -1}) {
        for (int sy : {+1, -1}) {
            std::string suffix = std::string(sx > 0 ? "" : "_mx") + (sy > 0 ? "" : "_my");
            auto reflect = [&](C z) { return C(sx * z.real(), sy * z.imag()); };
            cs.curves.push_back(line_segment_curve(reflect(tangency), reflect(C(2, 0)),
                                                   "ncf_k0" + suffix, samples));
            double a0 = M_PI / 3.0, a1 = M_PI / 2.0;
            PlaneCurve arc = circle_curve(C(0, 0), 1.0, "ncf_unit_arc" + suffix, samples, a0, a1, true);
            for (auto& s : arc.samples) {
                s[0] *= sx;
                s[1] *= sy;
            }
            cs.curves.push_back(std::move(arc));
            PlaneCurve par;
            par.kind = CurveKind::parabola;
            par.name = "ncf_parabola_arc" + suffix;
            par.coeffs = {0.0, sy * 1.0, -sy * 0.25};
            for (int i = 0; i < samples; ++i) {
                double x = 2.0 * static_cast<double>(i) / (samples - 1);
                par.samples.push_back({sx * x, sy * (1.0 - x * x / 4.0)});
            }
            cs.curves.push_back(std::move(par));
        }
    }

    for (int n = tess_lo; n <= tess_hi; ++n) {
        cs.curves.push_back(
            circle_curve(C(0, 0), t_radius(n), "C_{t_" + std::to_string(n) + "}", samples));
    }

    // loxodromic-parabolic square |x| + |y| = 2
    const C v[4] = {C(2, 0), C(0, 2), C(-2, 0), C(0, -2)};
    for (int k = 0; k < 4; ++k)
        cs.curves.push_back(
            line_segment_curve(v[k], v[(k + 1) % 4], "d2_square_side_" + std::to_string(k), samples));
    return cs;
}

std::array<PlaneCurve, 2> nsdc_from_iteration(int samples) {
    require_samples(samples);
    std::array<PlaneCurve, 2> out;
    // vertical side x0 = 1/2 maps through f then z -> -4z onto the right arc;
    // horizontal side y0 = 1/2 onto the left arc
    for (int k = 0; k < 2; ++k) {
        PlaneCurve& pc = out[k];
        pc.kind = CurveKind::parabola;
        pc.name = k == 0 ? "nsdc_iterated_right" : "nsdc_iterated_left";
        double sign = k == 0 ? 1.0 : -1.0;
        pc.coeffs = {1.0, sign * 2.0, -sign * 0.125};
        for (int i = 0; i < samples; ++i) {
            double t = -0.5 + static_cast<double>(i) / (samples - 1);
            C z0 = k == 0 ? C(0.5, t) : C(t, 0.5);
            C z = -4.0 * fmap(z0);
            pc.samples.push_back({z.real(), z.imag()});
        }
    }
    return out;
}

} // namespace twopar
