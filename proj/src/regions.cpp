#include "twopar/regions.hpp"

#include "twopar/errors.hpp"

#include <cmath>

namespace twopar {

const char* to_string(ClassicalTs v) {
    switch (v) {
        case ClassicalTs::interior: return "interior";
        case ClassicalTs::boundary: return "boundary";
        case ClassicalTs::outside: return "outside";
    }
    return "?";
}

const char* to_string(NsdcRegion v) {
    switch (v) {
        case NsdcRegion::exterior_region: return "exterior_region";
        case NsdcRegion::boundary: return "boundary";
        case NsdcRegion::inside: return "inside";
    }
    return "?";
}

const char* to_string(Discreteness v) {
    switch (v) {
        case Discreteness::discrete: return "discrete";
        case Discreteness::non_discrete: return "non_discrete";
        case Discreteness::indeterminate: return "indeterminate";
    }
    return "?";
}

const char* to_string(NcfTag v) {
    switch (v) {
        case NcfTag::A1: return "A1";
        case NcfTag::A2: return "A2";
        case NcfTag::negA1: return "-A1";
        case NcfTag::negA2: return "-A2";
        case NcfTag::conjA1: return "conj A1";
        case NcfTag::conjA2: return "conj A2";
        case NcfTag::negConjA1: return "-conj A1";
        case NcfTag::negConjA2: return "-conj A2";
    }
    return "?";
}

const char* to_string(SpecialPoint v) {
    switch (v) {
        case SpecialPoint::plus_two: return "+2";
        case SpecialPoint::minus_two: return "-2";
        case SpecialPoint::plus_i: return "+i";
        case SpecialPoint::minus_i: return "-i";
    }
    return "?";
}

namespace {

struct XY {
    bool exact;
    mpq_class qx, qy; // exact mode
    double x, y;      // floating mode
};

XY split(const ComplexValue& z) {
    XY r;
    r.exact = z.is_exact();
    if (r.exact) {
        r.qx = z.rat().re;
        r.qy = z.rat().im;
        r.x = r.qx.get_d();
        r.y = r.qy.get_d();
    } else {
        r.x = z.re();
        r.y = z.im();
    }
    return r;
}

mpq_class qabs(const mpq_class& q) { return q >= 0 ? q : mpq_class(-q); }

} // namespace

ClassicalTs in_classical_ts(const ComplexValue& lambda) {
    XY p = split(lambda);
    if (p.exact) {
        mpq_class lhs = 4 * qabs(p.qy) + p.qx * p.qx; // vs 4
        if (lhs < 4) return ClassicalTs::outside;
        bool on_arcs = (lhs == 4) && qabs(p.qx) <= 2;
        return on_arcs ? ClassicalTs::boundary : ClassicalTs::interior;
    }
    double lhs = 4.0 * std::abs(p.y) + p.x * p.x;
    if (lhs < 4.0 - kEpsBoundary) return ClassicalTs::outside;
    if (std::abs(lhs - 4.0) <= kEpsBoundary && std::abs(p.x) <= 2.0 + kEpsBoundary)
        return ClassicalTs::boundary;
    return ClassicalTs::interior;
}

NsdcRegion in_nsdc(const ComplexValue& lambda) {
    XY p = split(lambda);
    if (p.exact) {
        mpq_class lhs = p.qy * p.qy;       // vs 16 - 8|x|
        mpq_class rhs = 16 - 8 * qabs(p.qx);
        if (lhs == rhs && qabs(p.qx) <= 2) return NsdcRegion::boundary;
        return lhs > rhs ? NsdcRegion::exterior_region : NsdcRegion::inside;
    }
    double lhs = p.y * p.y;
    double rhs = 16.0 - 8.0 * std::abs(p.x);
    if (std::abs(lhs - rhs) <= kEpsBoundary && std::abs(p.x) <= 2.0 + kEpsBoundary)
        return NsdcRegion::boundary;
    return lhs > rhs ? NsdcRegion::exterior_region : NsdcRegion::inside;
}

namespace {

// First-quadrant membership tests for the two base regions; mu = (x, y) with
// x, y >= 0.  All comparisons reduce to rational inequalities:
//   theta in [pi/3, pi/2]  <=>  y^2 >= 3 x^2
//   K-line  y >= sqrt(3)(2 - x)/3  <=>  x >= 2 or 3 y^2 >= (2 - x)^2
//   strictly below the parabola  <=>  4 y < 4 - x^2
struct Quadrant {
    bool exact;
    mpq_class qx, qy;
    double x, y;

    bool below_parabola_strict() const {
        if (exact) return 4 * qy < 4 - qx * qx;
        return 4.0 * y < 4.0 - x * x - kEpsBoundary;
    }
    bool in_a1() const {
        if (exact) return qx * qx + qy * qy >= 1 && qy * qy >= 3 * qx * qx && below_parabola_strict();
        return x * x + y * y >= 1.0 - kEpsBoundary && y * y >= 3.0 * x * x - kEpsBoundary &&
               below_parabola_strict();
    }
    bool in_a2() const {
        bool kline, sector;
        if (exact) {
            kline = qx >= 2 || 3 * qy * qy >= (2 - qx) * (2 - qx);
            sector = qy * qy <= 3 * qx * qx;
            return kline && sector && below_parabola_strict();
        }
        kline = x >= 2.0 || 3.0 * y * y >= (2.0 - x) * (2.0 - x) - kEpsBoundary;
        sector = y * y <= 3.0 * x * x + kEpsBoundary;
        return kline && sector && below_parabola_strict();
    }
    // The explicitly included corner points of K0 and the unit-circle arc.
    bool is_two() const {
        if (exact) return qx == 2 && qy == 0;
        return std::abs(x - 2.0) <= kEpsBoundary && std::abs(y) <= kEpsBoundary;
    }
    bool is_i() const {
        if (exact) return qx == 0 && qy == 1;
        return std::abs(x) <= kEpsBoundary && std::abs(y - 1.0) <= kEpsBoundary;
    }
};

} // namespace

std::optional<NcfTag> in_ncf(const ComplexValue& lambda) {
    XY p = split(lambda);
    bool sx, sy;
    Quadrant q;
    q.exact = p.exact;
    if (p.exact) {
        sx = p.qx >= 0;
        sy = p.qy >= 0;
        q.qx = qabs(p.qx);
        q.qy = qabs(p.qy);
        q.x = q.qx.get_d();
        q.y = q.qy.get_d();
    } else {
        sx = p.x >= 0;
        sy = p.y >= 0;
        q.x = std::abs(p.x);
        q.y = std::abs(p.y);
    }

    int base; // 0: none, 1: A1, 2: A2
    if (q.in_a1() || q.is_i())
        base = 1;
    else if (q.in_a2() || q.is_two())
        base = 2;
    else
        return std::nullopt;

    if (sx && sy) return base == 1 ? NcfTag::A1 : NcfTag::A2;
    if (sx && !sy) return base == 1 ? NcfTag::conjA1 : NcfTag::conjA2;
    if (!sx && !sy) return base == 1 ? NcfTag::negA1 : NcfTag::negA2;
    return base == 1 ? NcfTag::negConjA1 : NcfTag::negConjA2;
}

RegionReport classify(const ComplexValue& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    RegionReport r;
    r.lambda = lambda;

    XY p = split(lambda);
    if (p.exact) {
        r.jorgensen_interior = p.qx * p.qx + p.qy * p.qy < mpq_class(1, 4);
        r.diamond_member = qabs(p.qx) + qabs(p.qy) <= 1;
        r.lox_par_generators = qabs(p.qx) + qabs(p.qy) >= 2;
    } else {
        double n2 = p.x * p.x + p.y * p.y;
        r.jorgensen_interior = n2 < 0.25 - kEpsBoundary;
        double l1 = std::abs(p.x) + std::abs(p.y);
        r.diamond_member = l1 <= 1.0 + kEpsBoundary;
        r.lox_par_generators = l1 >= 2.0 - kEpsBoundary;
    }

    r.classical_ts = in_classical_ts(lambda);
    r.nsdc = in_nsdc(lambda);
    r.ncf_member = in_ncf(lambda);

    SchottkyIndex si = schottky_index(lambda);
    r.nth_classical = si.index;
    r.nth_reason = si.reason;
    if (!si.index && si.reason == IndexReason::on_jorgensen_circle)
        r.notes.push_back("on_jorgensen_circle");

    auto eq = [&](long re, long im) {
        if (p.exact) return lambda.rat() == GaussianRational{re, im};
        return lambda.cd() == std::complex<double>(static_cast<double>(re), static_cast<double>(im));
    };
    if (eq(2, 0)) r.special_boundary_point = SpecialPoint::plus_two;
    else if (eq(-2, 0)) r.special_boundary_point = SpecialPoint::minus_two;
    else if (eq(0, 1)) r.special_boundary_point = SpecialPoint::plus_i;
    else if (eq(0, -1)) r.special_boundary_point = SpecialPoint::minus_i;

    r.annulus_index = annulus_of(lambda);

    if (r.jorgensen_interior)
        r.discreteness = Discreteness::non_discrete;
    else if (r.classical_ts != ClassicalTs::outside || r.ncf_member)
        r.discreteness = Discreteness::discrete;
    else
        r.discreteness = Discreteness::indeterminate;

    if (r.nsdc == NsdcRegion::exterior_region && std::abs(p.x) > 2.0 && p.y == 0.0)
        r.notes.push_back("nsdc exterior by convention: parabolas close at x = +/-2");
    return r;
}

} // namespace twopar
