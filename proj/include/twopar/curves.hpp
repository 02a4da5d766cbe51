#pragma once

#include "twopar/complex_value.hpp"

#include <array>
#include <string>
#include <vector>

namespace twopar {

inline constexpr int kDefaultSamples = 512;
inline constexpr double kCurveResidualTol = 1e-9;
inline constexpr int kPreimageDepthCap = 12;

enum class CurveKind { parabola, hyperbola_branch, line_segment, circle, arc, polyline };
const char* to_string(CurveKind k);

// A sampled plane curve with the coefficients of its locus equation.
// Coefficient conventions:
//   parabola:         {axis, A, B}; axis 0: y = A + B x^2, axis 1: x = A + B y^2
//   hyperbola_branch: {a, b, c, d, e, f} for a x^2 + b xy + c y^2 + d x + e y + f = 0
//   line_segment:     {nx, ny, c} for nx*x + ny*y = c (unit normal)
//   circle / arc:     {cx, cy, r}
//   polyline:         none (samples only)
struct PlaneCurve {
    CurveKind kind = CurveKind::polyline;
    std::string name;
    std::vector<double> coeffs;
    std::vector<std::array<double, 2>> samples;

    // Residual of the locus equation at (x, y); 0 for polylines.
    double residual_at(double x, double y) const;
    double max_sample_residual() const;
};

struct CurveSet {
    std::vector<PlaneCurve> curves;
};

// Image of the line x + y = c under f: the parabola y = -c^2 + x^2/(4 c^2),
// sampled over the strip |x| <= 2.
PlaneCurve image_of_diag_line(double c, int samples = kDefaultSamples);

// x0 = c maps to x = -2 c^2 + y^2/(8 c^2); y0 = c maps to x = 2 c^2 - y^2/(8 c^2).
// Samples cover the image of the square-side segment |t| <= |c|.
PlaneCurve image_of_vertical_line(double c, int samples = kDefaultSamples);
PlaneCurve image_of_horizontal_line(double c, int samples = kDefaultSamples);

// True preimage of y = m x + b (m, b != 0): the conic
// x^2 - (2/m) xy - y^2 = b/(2m), sampled by pulling line samples back through
// f on both branches.  x_lo/x_hi bound the sampled line segment.
PlaneCurve preimage_of_line(double m, double b, double x_lo = -4.0, double x_hi = 4.0,
                            int samples = kDefaultSamples);

// f(L_theta) = L_{2 theta} for lines through the origin.
double line_through_origin_image(double theta);

// The two arcs +/-y = 1 - x^2/4, -2 <= x <= 2.
std::array<PlaneCurve, 2> schottky_parabolas(int samples_per_arc = kDefaultSamples);

// n-fold preimages of the Schottky parabolas: n = 0 the arcs themselves,
// n = 1 the diamond |x| + |y| = 1, n >= 2 pulled-back branch polylines
// (2^n per arc, grouped by sign sequence).
std::vector<PlaneCurve> boundary_nth(int n, int samples = kDefaultSamples,
                                     int depth_cap = kPreimageDepthCap);

// Every named boundary: Jorgensen circle, Schottky parabolas, NSDC parabolas,
// NCF boundary pieces (K0, unit-circle arc, parabola arcs, reflections),
// tessellation circles C_{t_n}, and the |x|+|y| = 2 square.
CurveSet named_boundaries(int samples = kDefaultSamples, int tess_lo = -1, int tess_hi = 6);

// The NSDC boundary generated by mapping the square with vertices
// (+/-1/2, +/-1/2) through f and scaling by -4; coincides with y^2 = 16 - 8|x|.
std::array<PlaneCurve, 2> nsdc_from_iteration(int samples = kDefaultSamples);

} // namespace twopar
