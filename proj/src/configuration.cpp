#include "twopar/configuration.hpp"

#include "twopar/errors.hpp"
#include "twopar/group.hpp"
#include "twopar/regions.hpp"

#include <algorithm>
#include <cmath>

namespace twopar {

namespace {
using Cx = std::complex<double>;

constexpr double kTanTol = 1e-7;    // tangency detection
constexpr double kOverlapTol = 1e-9; // allowed penetration
constexpr double kRayLen = 12.0;

double dot(Cx a, Cx b) { return a.real() * b.real() + a.imag() * b.imag(); }
double cross(Cx a, Cx b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct Piece { // segment when bounded, ray when t unbounded above
    Cx a;
    Cx d;        // unit direction
    double tmax; // length, or +inf for rays
};

double dist_point_piece(Cx p, const Piece& pc, Cx* closest = nullptr) {
    double t = dot(p - pc.a, pc.d);
    t = std::clamp(t, 0.0, pc.tmax);
    Cx q = pc.a + t * pc.d;
    if (closest) *closest = q;
    return std::abs(p - q);
}

double dist_piece_piece(const Piece& p, const Piece& q) {
    // crossing test via the parametric solution
    double denom = cross(p.d, q.d);
    if (std::abs(denom) > 1e-14) {
        Cx r = q.a - p.a;
        double t = cross(r, q.d) / denom;
        double s = cross(r, p.d) / denom;
        if (t >= 0 && t <= p.tmax && s >= 0 && s <= q.tmax) return 0.0;
    }
    double best = 1e300;
    Cx tmp;
    // endpoint-to-piece distances cover the non-crossing case
    best = std::min(best, dist_point_piece(q.a, p, &tmp));
    if (std::isfinite(q.tmax)) best = std::min(best, dist_point_piece(q.a + q.tmax * q.d, p, &tmp));
    best = std::min(best, dist_point_piece(p.a, q, &tmp));
    if (std::isfinite(p.tmax)) best = std::min(best, dist_point_piece(p.a + p.tmax * p.d, q, &tmp));
    return best;
}

std::vector<Piece> pieces_of(const PolyCurve& c, double ray_clip) {
    std::vector<Piece> out;
    if (c.is_line) {
        Cx d = c.line_dir / std::abs(c.line_dir);
        out.push_back({c.line_point - ray_clip * d, d, 2.0 * ray_clip});
        return out;
    }
    Cx din = c.dir_in / std::abs(c.dir_in);
    out.push_back({c.corners.front() + ray_clip * din, -din, ray_clip}); // incoming ray, clipped
    for (std::size_t i = 0; i + 1 < c.corners.size(); ++i) {
        Cx d = c.corners[i + 1] - c.corners[i];
        double len = std::abs(d);
        if (len < 1e-15) continue;
        out.push_back({c.corners[i], d / len, len});
    }
    Cx dout = c.dir_out / std::abs(c.dir_out);
    out.push_back({c.corners.back(), dout, ray_clip});
    return out;
}

int crossings(Cx a, Cx b, const std::vector<Piece>& pieces) {
    // count proper crossings of segment a->b with the pieces
    Cx d = b - a;
    double len = std::abs(d);
    Piece seg{a, d / len, len};
    int count = 0;
    for (const auto& p : pieces) {
        double denom = cross(seg.d, p.d);
        if (std::abs(denom) < 1e-14) continue;
        Cx r = p.a - seg.a;
        double t = cross(r, p.d) / denom;
        double s = cross(r, seg.d) / denom;
        if (t >= 0 && t <= seg.tmax && s >= 0 && s < p.tmax) ++count;
    }
    return count;
}

} // namespace

PolyCurve PolyCurve::translated(Cx v) const {
    PolyCurve out = *this;
    if (is_line) {
        out.line_point += v;
    } else {
        for (auto& c : out.corners) c += v;
    }
    return out;
}

std::vector<Cx> PolyCurve::sample(int per_piece, double ray_len) const {
    std::vector<Cx> out;
    for (const auto& p : pieces_of(*this, ray_len)) {
        double tmax = std::isfinite(p.tmax) ? p.tmax : ray_len;
        for (int i = 0; i <= per_piece; ++i)
            out.push_back(p.a + tmax * static_cast<double>(i) / per_piece * p.d);
    }
    return out;
}

double PolyCurve::distance(Cx p) const {
    double best = 1e300;
    for (const auto& pc : pieces_of(*this, kRayLen * 4)) best = std::min(best, dist_point_piece(p, pc));
    return best;
}

const char* to_string(ConfigCase c) {
    switch (c) {
        case ConfigCase::classical_interior: return "classical_interior";
        case ConfigCase::classical_boundary: return "classical_boundary";
        case ConfigCase::ncf_boundary: return "ncf_boundary";
        case ConfigCase::ncf_interior: return "ncf_interior";
    }
    return "?";
}

std::optional<ConfigCase> config_case_from_key(const std::string& key) {
    if (key == "classical_interior") return ConfigCase::classical_interior;
    if (key == "classical_boundary") return ConfigCase::classical_boundary;
    if (key == "ncf_boundary") return ConfigCase::ncf_boundary;
    if (key == "ncf_interior") return ConfigCase::ncf_interior;
    return std::nullopt;
}

VerifyReport verify_configuration(const SchottkyConfiguration& cfg, int samples, double tol) {
    VerifyReport rep;

    // degenerate pairing rejection
    MoebiusMatrix id = MoebiusMatrix::identity();
    if (matrices_near(cfg.S, id, 1e-12) || std::abs(cfg.C1.center - cfg.C2.center) < 1e-12) {
        rep.pairing_trivial = true;
        rep.issues.push_back("trivial pairing: S = I or C1 = C2");
    }

    // pairing residuals: S maps C1 onto C2, T maps L1 onto L2
    double res = 0.0;
    for (int i = 0; i < samples; ++i) {
        double th = 2.0 * M_PI * i / samples;
        Cx z = cfg.C1.center + cfg.C1.radius * Cx(std::cos(th), std::sin(th));
        Cx w = cfg.S.apply_cd(z);
        res = std::max(res, std::abs(std::abs(w - cfg.C2.center) - cfg.C2.radius));
    }
    for (Cx z : cfg.L1.sample(48, kRayLen)) {
        Cx w = cfg.T.apply_cd(z);
        res = std::max(res, cfg.L2.distance(w));
    }
    rep.pairing_residual = res;
    rep.pairing_ok = res <= tol;

    // disjointness and tangency collection
    bool ok = true;
    std::vector<Tangency> tans;
    auto add_tan = [&tans](int a, int b, Cx p, bool inf = false) {
        for (const auto& t : tans)
            if (t.a == a && t.b == b && !t.at_infinity && !inf && std::abs(t.point - p) < 1e-6)
                return;
        tans.push_back({a, b, inf, p});
    };

    // C1 vs C2
    {
        double gap = std::abs(cfg.C2.center - cfg.C1.center) - cfg.C1.radius - cfg.C2.radius;
        if (gap < -kOverlapTol) {
            ok = false;
            rep.issues.push_back("C1 and C2 overlap");
        } else if (std::abs(gap) <= kTanTol) {
            add_tan(0, 1, 0.5 * (cfg.C1.center + cfg.C2.center));
        }
    }

    const CircleCurve* circles[2] = {&cfg.C1, &cfg.C2};
    const PolyCurve* polys[2] = {&cfg.L1, &cfg.L2};

    // circle vs poly: distance and side containment
    Cx ref1 = cfg.L1.is_line ? cfg.L1.line_point : cfg.L1.corners.front();
    Cx ref2 = cfg.L2.is_line ? cfg.L2.line_point : cfg.L2.corners.front();
    Cx tau = cfg.T.b.cd(); // translation 2*lambda
    Cx inside_l2 = ref1 + 2.0 * tau;
    Cx inside_l1 = ref2 - 2.0 * tau;

    for (int ci = 0; ci < 2; ++ci) {
        for (int li = 0; li < 2; ++li) {
            const CircleCurve& cc = *circles[ci];
            const PolyCurve& pl = *polys[li];
            auto pieces = pieces_of(pl, kRayLen * 4);
            double best = 1e300;
            for (const auto& p : pieces) {
                Cx q;
                double d = dist_point_piece(cc.center, p, &q);
                best = std::min(best, d);
                if (std::abs(d - cc.radius) <= kTanTol) add_tan(ci, 2 + li, q);
            }
            if (best - cc.radius < -kOverlapTol) {
                ok = false;
                rep.issues.push_back("circle crosses L-curve");
            }
            // the disk must not sit beyond the curve (inside its interior side)
            Cx witness = li == 0 ? inside_l1 : inside_l2;
            if (crossings(cc.center, witness, pieces) % 2 == 0 && best > cc.radius) {
                ok = false;
                rep.issues.push_back("circle lies beyond an L-curve");
            }
        }
    }

    // L1 vs L2: must not touch at finite points; tangent at infinity when the
    // end directions are parallel
    {
        auto pa = pieces_of(cfg.L1, kRayLen * 4);
        auto pb = pieces_of(cfg.L2, kRayLen * 4);
        double best = 1e300;
        for (const auto& p : pa)
            for (const auto& q : pb) best = std::min(best, dist_piece_piece(p, q));
        if (best <= kTanTol) {
            ok = false;
            rep.issues.push_back("L1 and L2 touch at a finite point");
        }
        Cx d1 = cfg.L1.is_line ? cfg.L1.line_dir : cfg.L1.dir_out;
        Cx d2 = cfg.L2.is_line ? cfg.L2.line_dir : cfg.L2.dir_out;
        if (std::abs(cross(d1 / std::abs(d1), d2 / std::abs(d2))) < 1e-9)
            add_tan(2, 3, Cx(0, 0), true);
    }

    rep.disjoint_ok = ok;
    rep.tangencies = tans;
    rep.tangency_count = static_cast<int>(tans.size());
    return rep;
}

namespace {

MoebiusMatrix standard_S() {
    return {ComplexValue::exact(1), ComplexValue::exact(0), ComplexValue::exact(1),
            ComplexValue::exact(1), std::string("S")};
}

MoebiusMatrix standard_T(const ComplexValue& lambda) {
    return {ComplexValue::exact(1), ComplexValue::exact(2) * lambda, ComplexValue::exact(0),
            ComplexValue::exact(1), std::string("T")};
}

struct Line {
    Cx point;
    Cx normal; // unit
    Cx dir() const { return Cx(-normal.imag(), normal.real()); }
};

std::optional<Cx> intersect(const Line& a, const Line& b) {
    // solve a.normal . z = a.c ; b.normal . z = b.c
    double a1 = a.normal.real(), a2 = a.normal.imag();
    double b1 = b.normal.real(), b2 = b.normal.imag();
    double det = a1 * b2 - a2 * b1;
    if (std::abs(det) < 1e-12) return std::nullopt;
    double c1 = dot(a.normal, a.point), c2 = dot(b.normal, b.point);
    return Cx((c1 * b2 - c2 * a2) / det, (a1 * c2 - b1 * c1) / det);
}

bool same_line(const Line& a, const Line& b) {
    return std::abs(cross(a.normal, b.normal)) < 1e-12 &&
           std::abs(dot(a.normal, a.point - b.point)) < 1e-12;
}

// Common inner tangents of two radius-1 circles with centers A, B,
// |B - A| >= 2; they pass through the midpoint.
std::vector<Line> inner_tangents(Cx A, Cx B) {
    std::vector<Line> out;
    Cx mid = 0.5 * (A + B);
    double d = std::abs(B - A);
    if (d < 2.0 - 1e-12) return out;
    Cx u = (B - A) / d;
    if (d <= 2.0 + 1e-12) {
        out.push_back({mid, u}); // tangent circles: the unique common tangent
        return out;
    }
    double alpha = std::asin(2.0 / d);
    for (int s : {+1, -1}) {
        Cx e = u * std::polar(1.0, s * alpha); // line direction
        out.push_back({mid, Cx(-e.imag(), e.real())});
    }
    return out;
}

// Chain consecutive lines into a Jordan polyline through infinity.
std::optional<PolyCurve> chain_lines(std::vector<Line> lines) {
    // merge consecutive duplicates
    std::vector<Line> ls;
    for (const auto& l : lines) {
        if (!ls.empty() && same_line(ls.back(), l)) continue;
        ls.push_back(l);
    }
    // drop interior lines whose piece would be a single point (the corner with
    // the previous line coincides with the corner with the next one)
    for (bool changed = true; changed && ls.size() >= 3;) {
        changed = false;
        for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
            auto a = intersect(ls[i - 1], ls[i]);
            auto b = intersect(ls[i], ls[i + 1]);
            if (a && b && std::abs(*a - *b) < 1e-12) {
                ls.erase(ls.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
        if (changed) {
            std::vector<Line> merged;
            for (const auto& l : ls) {
                if (!merged.empty() && same_line(merged.back(), l)) continue;
                merged.push_back(l);
            }
            ls = std::move(merged);
        }
    }
    PolyCurve pc;
    if (ls.size() == 1) {
        pc.is_line = true;
        pc.line_point = ls[0].point;
        pc.line_dir = ls[0].dir();
        return pc;
    }
    std::vector<Cx> corners;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        auto q = intersect(ls[i], ls[i + 1]);
        if (!q) return std::nullopt; // parallel distinct: no chain
        corners.push_back(*q);
    }
    pc.corners = corners;
    Cx din = ls.front().dir();
    Cx ref = corners.size() > 1 ? corners[1] : corners[0] + ls.back().dir();
    if (dot(din, ref - corners.front()) > 0) din = -din;
    pc.dir_in = din;
    Cx dout = ls.back().dir();
    Cx refb = corners.size() > 1 ? corners[corners.size() - 2] : corners[0] - din;
    if (dot(dout, refb - corners.back()) > 0) dout = -dout;
    pc.dir_out = dout;
    return pc;
}

SchottkyConfiguration base_config(ConfigCase kase, const ComplexValue& lambda) {
    SchottkyConfiguration cfg;
    cfg.kase = kase;
    cfg.lambda = lambda;
    cfg.C1 = {Cx(-1, 0), 1.0};
    cfg.C2 = {Cx(1, 0), 1.0};
    cfg.S = standard_S();
    cfg.T = standard_T(lambda);
    return cfg;
}

SchottkyConfiguration build_classical(ConfigCase kase, const ComplexValue& lambda) {
    ClassicalTs region = in_classical_ts(lambda);
    if (kase == ConfigCase::classical_interior && region != ClassicalTs::interior)
        throw WrongRegion("lambda is not interior to the classical region");
    if (kase == ConfigCase::classical_boundary && region != ClassicalTs::boundary)
        throw WrongRegion("lambda is not on the classical boundary");

    Cx lam = lambda.cd();
    Cx lhat = lam / std::abs(lam);
    for (int step = 0; step <= 19; ++step) {
        double c = 1.0 - 0.05 * step;
        SchottkyConfiguration cfg = base_config(kase, lambda);
        cfg.widen_c = c;
        PolyCurve l1;
        l1.is_line = true;
        l1.line_point = -c * lam;
        l1.line_dir = Cx(-lhat.imag(), lhat.real());
        cfg.L1 = l1;
        cfg.L2 = l1.translated(2.0 * lam);
        VerifyReport rep = verify_configuration(cfg);
        if (rep.pass()) {
            cfg.tangencies = rep.tangencies;
            return cfg;
        }
    }
    throw ConstructionFailed("no verified line configuration for lambda = " + lambda.str());
}

bool on_k_segment(Cx lam, double tol) {
    const double s3 = std::sqrt(3.0);
    if (lam.real() < 0.5 - tol || lam.real() > 2.0 + tol) return false;
    return std::abs(lam.imag() - s3 * (2.0 - lam.real()) / 3.0) <= tol;
}

bool on_unit_arc(Cx lam, double tol) {
    if (std::abs(std::abs(lam) - 1.0) > tol) return false;
    double th = std::arg(lam);
    return th >= M_PI / 3.0 - 1e-9 && th <= M_PI / 2.0 + 1e-9;
}

SchottkyConfiguration build_ncf_boundary(const ComplexValue& lambda) {
    Cx lam = lambda.cd();
    double tol = 1e-9;
    if (!on_k_segment(lam, tol) && !on_unit_arc(lam, tol))
        throw WrongRegion("lambda is not on K0 or the unit-circle arc");

    Cx c1(-1, 0), c2(1, 0);
    Cx tc1 = c1 + 2.0 * lam, tc2 = c2 + 2.0 * lam;
    auto m1s = inner_tangents(c1, tc1);
    auto m3s = inner_tangents(c2, tc1);
    auto m2s = inner_tangents(c2, tc2);
    if (m1s.empty() || m2s.empty() || m3s.empty())
        throw ConstructionFailed("tangent lines unavailable: circles overlap at lambda = " +
                                 lambda.str());

    for (const auto& m1 : m1s) {
        for (const auto& m3 : m3s) {
            for (const auto& m2 : m2s) {
                SchottkyConfiguration cfg = base_config(ConfigCase::ncf_boundary, lambda);
                auto l2 = chain_lines({m1, m3, m2});
                if (!l2) continue;
                cfg.L2 = *l2;
                cfg.L1 = l2->translated(-2.0 * lam);
                cfg.recipe_extrapolated = on_unit_arc(lam, tol) && std::arg(lam) > M_PI / 3.0 + 1e-9;
                VerifyReport rep = verify_configuration(cfg);
                if (rep.pass()) {
                    cfg.tangencies = rep.tangencies;
                    return cfg;
                }
            }
        }
    }
    throw ConstructionFailed("no verified ncf_boundary configuration at lambda = " + lambda.str());
}

SchottkyConfiguration build_ncf_interior(const ComplexValue& q) {
    ComplexValue lambda = q / ComplexValue::exact(2);
    if (!in_ncf(lambda))
        throw WrongRegion("induced lambda = q/2 is not in the ncf region");
    Cx lam = lambda.cd();
    double yl = lam.imag();
    if (yl <= 0.0) throw WrongRegion("construction requires Im(lambda) > 0");

    Cx lhat = lam / std::abs(lam);
    Cx c1(-1, 0), c2(1, 0);
    Cx tc1 = c1 + 2.0 * lam, tc2 = c2 + 2.0 * lam;
    // five pieces: bisector(C1,TC1), T(M1), bisector(TC1,C2), the mirror of
    // T(M1) across M2, bisector(C2,TC2)
    Line p1{0.5 * (c1 + tc1), lhat};
    Line p2{Cx(0.0, 2.0 * yl - 1.0), Cx(0, 1)};
    Cx n3 = (c2 - tc1) / std::abs(c2 - tc1);
    Line p3{0.5 * (tc1 + c2), n3};
    Line p4{Cx(0.0, 3.0 - 2.0 * yl), Cx(0, 1)};
    Line p5{0.5 * (c2 + tc2), lhat};

    SchottkyConfiguration cfg = base_config(ConfigCase::ncf_interior, lambda);
    auto l2 = chain_lines({p1, p2, p3, p4, p5});
    if (!l2) throw ConstructionFailed("ncf_interior pieces do not chain at lambda = " + lambda.str());
    cfg.L2 = *l2;
    cfg.L1 = l2->translated(-2.0 * lam);
    VerifyReport rep = verify_configuration(cfg);
    if (!rep.pass()) {
        std::string why;
        for (const auto& s : rep.issues) why += s + "; ";
        throw ConstructionFailed("ncf_interior configuration failed verification at lambda = " +
                                 lambda.str() + ": " + why);
    }
    cfg.tangencies = rep.tangencies;
    return cfg;
}

} // namespace

SchottkyConfiguration build_configuration(ConfigCase kase, const ComplexValue& input) {
    switch (kase) {
        case ConfigCase::classical_interior:
        case ConfigCase::classical_boundary:
            if (input.is_zero()) throw ZeroLambda();
            return build_classical(kase, input);
        case ConfigCase::ncf_boundary:
            if (input.is_zero()) throw ZeroLambda();
            return build_ncf_boundary(input);
        case ConfigCase::ncf_interior:
            return build_ncf_interior(input);
    }
    throw UsageError("unknown configuration case");
}

SchottkyConfiguration ncf_interior_for_lambda(const ComplexValue& target) {
    SchottkyConfiguration cfg = build_configuration(ConfigCase::ncf_interior,
                                                    target * ComplexValue::exact(2));
    if (!cfg.lambda.near(target, 1e-6))
        throw ConstructionFailed("target lambda unreachable by the ncf_interior parameterization");
    return cfg;
}

CurveSet configuration_curves(const SchottkyConfiguration& cfg, double clip, int samples) {
    CurveSet cs;
    auto add_circle = [&](const CircleCurve& c, const std::string& name) {
        PlaneCurve pc;
        pc.kind = CurveKind::circle;
        pc.name = name;
        pc.coeffs = {c.center.real(), c.center.imag(), c.radius};
        for (int i = 0; i < samples; ++i) {
            double th = 2.0 * M_PI * i / (samples - 1);
            pc.samples.push_back(
                {c.center.real() + c.radius * std::cos(th), c.center.imag() + c.radius * std::sin(th)});
        }
        cs.curves.push_back(std::move(pc));
    };
    auto add_poly = [&](const PolyCurve& p, const std::string& name) {
        PlaneCurve pc;
        pc.kind = CurveKind::polyline;
        pc.name = name;
        for (Cx z : p.sample(samples / 8, clip)) pc.samples.push_back({z.real(), z.imag()});
        cs.curves.push_back(std::move(pc));
    };
    add_circle(cfg.C1, "C1");
    add_circle(cfg.C2, "C2");
    add_poly(cfg.L1, "L1");
    add_poly(cfg.L2, "L2");
    return cs;
}

} // namespace twopar
