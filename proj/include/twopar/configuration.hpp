#pragma once

#include "twopar/complex_value.hpp"
#include "twopar/curves.hpp"
#include "twopar/moebius.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace twopar {

enum class ConfigCase { classical_interior, classical_boundary, ncf_boundary, ncf_interior };
const char* to_string(ConfigCase c);
std::optional<ConfigCase> config_case_from_key(const std::string& key);

struct CircleCurve {
    std::complex<double> center;
    double radius = 1.0;
};

// A Jordan curve through infinity: two unbounded rays joined by a corner
// chain, or a straight line.
struct PolyCurve {
    bool is_line = false;
    std::complex<double> line_point, line_dir; // when is_line
    std::vector<std::complex<double>> corners; // when !is_line
    std::complex<double> dir_in, dir_out;      // unit ray directions toward infinity

    PolyCurve translated(std::complex<double> v) const;
    std::vector<std::complex<double>> sample(int per_piece, double ray_len) const;
    double distance(std::complex<double> p) const;
};

// curve indices in tangency records: 0 = C1, 1 = C2, 2 = L1, 3 = L2
struct Tangency {
    int a = 0, b = 0;
    bool at_infinity = false;
    std::complex<double> point;
};

struct SchottkyConfiguration {
    ConfigCase kase;
    ComplexValue lambda;
    CircleCurve C1, C2;
    PolyCurve L1, L2;
    MoebiusMatrix S, T;
    std::vector<Tangency> tangencies;
    bool recipe_extrapolated = false;
    double widen_c = 1.0; // line placement factor used by the classical builder
};

struct VerifyReport {
    bool pairing_ok = false;
    double pairing_residual = 0.0;
    bool disjoint_ok = false;
    bool pairing_trivial = false;
    int tangency_count = 0;
    std::vector<Tangency> tangencies;
    std::vector<std::string> issues;

    bool pass() const { return pairing_ok && disjoint_ok && !pairing_trivial; }
};

VerifyReport verify_configuration(const SchottkyConfiguration& cfg, int samples = 256,
                                  double tol = kCurveResidualTol);

// Construct the configuration for lambda (classical and ncf_boundary cases)
// or for the free parameter q with 2*lambda = q (ncf_interior).
SchottkyConfiguration build_configuration(ConfigCase kase, const ComplexValue& input);

// Convenience wrapper: ncf_interior configuration approximating a target
// lambda (within 1e-6); throws ConstructionFailed when unreachable.
SchottkyConfiguration ncf_interior_for_lambda(const ComplexValue& target);

// Sampled export form; unbounded rays are clipped to |x|, |y| <= clip.
CurveSet configuration_curves(const SchottkyConfiguration& cfg, double clip = 6.0,
                              int samples = kDefaultSamples);

} // namespace twopar
