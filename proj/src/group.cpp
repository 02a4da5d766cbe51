#include "twopar/group.hpp"

#include "twopar/errors.hpp"

#include <array>

namespace twopar {

MarkedGroup make_group(const ComplexValue& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    ComplexValue one = ComplexValue::exact(1);
    ComplexValue zero = ComplexValue::exact(0);
    MoebiusMatrix S{one, zero, one, one, std::string("S")};
    MoebiusMatrix T{one, ComplexValue::exact(2) * lambda, zero, one, std::string("T")};
    return {lambda, S, T};
}

TraceIdentityReport trace_identities(const MarkedGroup& g, double eps) {
    TraceIdentityReport r;
    r.lambda = g.lambda;
    ComplexValue two = ComplexValue::exact(2);
    r.tr_comm_minus2 = trace(commutator(g.S, g.T)) - two;
    r.tr_ST = trace(compose(g.S, g.T));
    r.tr_STinv = trace(compose(g.S, inverse(g.T)));

    ComplexValue four_l2 = ComplexValue::exact(4) * g.lambda * g.lambda;
    ComplexValue two_p = two + two * g.lambda;
    ComplexValue two_m = two - two * g.lambda;
    if (g.lambda.is_exact()) {
        r.all_pass = r.tr_comm_minus2 == four_l2 && r.tr_ST == two_p && r.tr_STinv == two_m;
    } else {
        r.all_pass = r.tr_comm_minus2.near(four_l2, eps) && r.tr_ST.near(two_p, eps) &&
                     r.tr_STinv.near(two_m, eps);
    }
    return r;
}

MoebiusMatrix parabolic_tower(const MarkedGroup& g, int i, int depth_cap) {
    if (i < 0) throw BadIndex("tower index must be >= 0");
    if (i > depth_cap)
        throw DepthExceeded("tower depth " + std::to_string(i) + " exceeds cap " +
                            std::to_string(depth_cap));
    MoebiusMatrix p = g.T;
    for (int k = 1; k <= i; ++k) p = compose(compose(p, g.S), inverse(p));
    return p;
}

std::string tower_word(int i, int depth_cap) {
    if (i < 0) throw BadIndex("tower index must be >= 0");
    if (i > depth_cap)
        throw DepthExceeded("tower depth " + std::to_string(i) + " exceeds cap " +
                            std::to_string(depth_cap));
    std::string w = "T";
    for (int k = 1; k <= i; ++k) w = w + "S" + inverse_word(w);
    return w;
}

std::string lift_word(const std::string& word, int times) {
    std::string w = word;
    for (int k = 0; k < times; ++k) {
        std::string out;
        out.reserve(w.size() * 3);
        for (char c : w) {
            switch (c) {
                case 'T': out += "TSt"; break;
                case 't': out += "Tst"; break;
                case 'S': out += 'S'; break;
                case 's': out += 's'; break;
                default: throw BadLetter(c);
            }
        }
        w = std::move(out);
    }
    return w;
}

MoebiusMatrix conjugator(const ComplexValue& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    ComplexValue one = ComplexValue::exact(1);
    ComplexValue zero = ComplexValue::exact(0);
    ComplexValue c = -(one / (ComplexValue::exact(2) * lambda));
    return {one, zero, c, one, std::nullopt};
}

MoebiusMatrix evaluate_word(const MarkedGroup& g, const std::string& word) {
    MoebiusMatrix m = MoebiusMatrix::identity();
    for (char c : word) {
        switch (c) {
            case 'S': m = compose(m, g.S); break;
            case 's': m = compose(m, inverse(g.S)); break;
            case 'T': m = compose(m, g.T); break;
            case 't': m = compose(m, inverse(g.T)); break;
            default: throw BadLetter(c);
        }
    }
    return m;
}

WhiteheadReport whitehead_analysis(const MarkedGroup& g, double eps) {
    WhiteheadReport r;
    r.lambda = g.lambda;

    auto commute = [&](const MoebiusMatrix& a, const MoebiusMatrix& b) {
        MoebiusMatrix lhs = compose(a, b);
        MoebiusMatrix rhs = compose(b, a);
        return g.lambda.is_exact() ? matrices_equal(lhs, rhs) : matrices_near(lhs, rhs, eps);
    };

    auto tower_triplet = [&](bool mirror) {
        MoebiusMatrix gen = mirror ? inverse(g.T) : g.T;
        MoebiusMatrix p1 = compose(compose(gen, g.S), inverse(gen));
        MoebiusMatrix p2 = compose(compose(p1, g.S), inverse(p1));
        return std::array<MoebiusMatrix, 3>{p1, p2, compose(inverse(g.S), p2)};
    };

    // The tower on T covers the points with positive real part; negating
    // lambda swaps T and T^-1, so the mirror tower covers the others.
    auto direct = tower_triplet(false);
    if (commute(g.T, direct[2])) {
        r.commutes = true;
    } else {
        auto mirrored = tower_triplet(true);
        if (commute(g.T, mirrored[2])) {
            r.commutes = true;
            r.used_inverse_tower = true;
            direct = mirrored;
        }
    }
    r.P1 = direct[0];
    r.P2 = direct[1];
    r.SinvP2 = direct[2];
    r.comm_s_p1 = commutator(g.S, r.P1);
    r.pair_word = r.used_inverse_tower ? kPairWordMirror : kPairWordDirect;

    r.fixed_points.push_back(SpherePoint::infinity());                     // T
    r.fixed_points.push_back(SpherePoint::finite(ComplexValue::exact(0))); // S
    auto push_fp = [&r](const MoebiusMatrix& m) {
        try {
            auto fps = fixed_points(m);
            r.fixed_points.push_back(fps.front());
        } catch (const IdentityElement&) {
            r.fixed_points.push_back(SpherePoint::infinity());
        }
    };
    push_fp(r.comm_s_p1);
    push_fp(r.SinvP2);

    // Interchanging S and T: the letter-swapped partner words share the fixed
    // point 0 with S at the special parameters.
    r.swap_word = kSwapWordDirect;
    for (const char* w : {kSwapWordDirect, kSwapWordMirror}) {
        MoebiusMatrix m = evaluate_word(g, w);
        if (commute(g.S, m)) {
            r.swap_word = w;
            r.swap_commutes = true;
            break;
        }
    }
    return r;
}

} // namespace twopar
