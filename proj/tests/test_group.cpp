#include <doctest.h>

#include "helpers.hpp"
#include "twopar/errors.hpp"
#include "twopar/group.hpp"

using namespace twopar;

namespace {
ComplexValue q(long n, long d = 1) { return ComplexValue::exact(mpq_class(n, d), mpq_class(0)); }
ComplexValue qi(long rn, long rd, long in, long id) {
    return ComplexValue::exact(mpq_class(rn, rd), mpq_class(in, id));
}
const ComplexValue whitehead = qi(1, 2, -1, 2); // (1 - i)/2
} // namespace

TEST_CASE("make_group wires the generator matrices") {
    MarkedGroup g1 = make_group(q(1));
    CHECK(g1.T.b == q(2));
    CHECK(g1.T.a == q(1));
    CHECK(g1.S.c == q(1));
    MarkedGroup gi = make_group(qi(0, 1, 1, 1));
    CHECK(gi.T.b == qi(0, 1, 2, 1));
    CHECK_THROWS_AS(make_group(q(0)), ZeroLambda);
}

TEST_CASE("trace identities hold for every exact lambda") {
    std::mt19937 rng(101);
    for (int i = 0; i < 200; ++i) {
        TraceIdentityReport r = trace_identities(make_group(testing::rand_gaussian_nonzero(rng)));
        CHECK(r.all_pass);
    }
    TraceIdentityReport r1 = trace_identities(make_group(q(1)));
    CHECK(r1.tr_ST == q(4));
    TraceIdentityReport r2 = trace_identities(make_group(q(2)));
    CHECK(r2.tr_STinv == q(-2));
    TraceIdentityReport r3 = trace_identities(make_group(qi(0, 1, 1, 1)));
    CHECK(r3.tr_comm_minus2 == q(-4)); // Tr [S,T] = -2 at lambda = i
}

TEST_CASE("parabolic tower") {
    MarkedGroup g = make_group(whitehead);
    CHECK(matrices_equal(parabolic_tower(g, 0), g.T));

    MoebiusMatrix p1 = parabolic_tower(g, 1);
    auto fp1 = fixed_points(p1);
    REQUIRE(fp1.size() == 1);
    CHECK(fp1[0].value == qi(1, 1, -1, 1)); // 1 - i

    MoebiusMatrix p2 = parabolic_tower(g, 2);
    CHECK(p2.a == q(-1));
    CHECK(p2.b == q(4));
    CHECK(p2.c == q(-1));
    CHECK(p2.d == q(3));

    CHECK_THROWS_AS(parabolic_tower(g, 17), DepthExceeded);
    CHECK_THROWS_AS(parabolic_tower(g, 3, 2), DepthExceeded);
}

TEST_CASE("tower parabolicity and word labels") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        MarkedGroup g = make_group(testing::rand_gaussian_nonzero(rng, 6, 5));
        for (int i = 0; i <= 4; ++i) {
            MoebiusMatrix p = parabolic_tower(g, i);
            CHECK(trace(p) == q(2));
            REQUIRE(p.label);
            CHECK(p.label->size() == (1u << (i + 1)) - 1);
            CHECK(*p.label == tower_word(i));
            CHECK(matrices_equal(evaluate_word(g, *p.label), p));
        }
    }
}

TEST_CASE("conjugator carries the level-one parabolic to the next generator") {
    MoebiusMatrix a_half = conjugator(q(1, 2));
    CHECK(a_half.c == q(-1));
    CHECK(a_half.a == q(1));
    CHECK_THROWS_AS(conjugator(q(0)), ZeroLambda);

    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        ComplexValue lam = testing::rand_gaussian_nonzero(rng);
        MarkedGroup g = make_group(lam);
        MoebiusMatrix a = conjugator(lam);
        CHECK(matrices_equal(conjugate(g.S, a), g.S));
        // A (T S T^-1) A^-1 = T_{-2 lambda^2} = [[1, -4 lambda^2],[0, 1]]
        MoebiusMatrix lifted = conjugate(parabolic_tower(g, 1), a);
        CHECK(lifted.a == q(1));
        CHECK(lifted.b == q(-4) * lam * lam);
        CHECK(lifted.c == q(0));
        CHECK(lifted.d == q(1));
    }
    // specific instance: lambda = (1-i)/2 lands on T_i
    MarkedGroup g = make_group(whitehead);
    MoebiusMatrix lifted = conjugate(parabolic_tower(g, 1), conjugator(whitehead));
    CHECK(lifted.b == qi(0, 1, 2, 1)); // 2i
}

TEST_CASE("evaluate_word") {
    MarkedGroup g = make_group(whitehead);
    CHECK(matrices_equal(evaluate_word(g, ""), MoebiusMatrix::identity()));
    MoebiusMatrix m = evaluate_word(g, "TSt");
    CHECK(m.a == q(1) + q(2) * whitehead);
    CHECK(m.b == q(-4) * whitehead * whitehead);
    MarkedGroup g1 = make_group(q(1));
    CHECK(trace(evaluate_word(g1, "STst")) == q(6));
    CHECK_THROWS_AS(evaluate_word(g1, "SxT"), BadLetter);
}

TEST_CASE("whitehead analysis at the four special points") {
    for (long sr : {+1L, -1L}) {
        for (long si : {+1L, -1L}) {
            MarkedGroup g = make_group(qi(sr, 2, si, 2));
            WhiteheadReport r = whitehead_analysis(g);
            CHECK(r.commutes);
            CHECK(r.swap_commutes);
            CHECK(trace(r.P1) == q(2));
            CHECK(trace(r.P2) == q(2));
            REQUIRE(r.fixed_points.size() == 4);
            CHECK(r.fixed_points[0].at_infinity);
            CHECK(r.fixed_points[1].value == q(0));
        }
    }
}

TEST_CASE("whitehead analysis details at (1-i)/2") {
    MarkedGroup g = make_group(whitehead);
    WhiteheadReport r = whitehead_analysis(g);
    CHECK(r.SinvP2.a == q(-1));
    CHECK(r.SinvP2.b == q(4));
    CHECK(r.SinvP2.c == q(0));
    CHECK(r.SinvP2.d == q(-1));
    CHECK(r.comm_s_p1.a == q(3));
    CHECK(r.comm_s_p1.b == q(-4));
    // fixed points: commutator at 1, S^-1 P2 at infinity
    CHECK(r.fixed_points[2].value == q(1));
    CHECK(r.fixed_points[3].at_infinity);
    // P2 fixes 2
    auto fp = fixed_points(r.P2);
    REQUIRE(fp.size() == 1);
    CHECK(fp[0].value == q(2));
}

TEST_CASE("whitehead commutation fails away from the special points") {
    CHECK(!whitehead_analysis(make_group(q(1))).commutes);
    CHECK(!whitehead_analysis(make_group(qi(1, 3, 1, 5))).commutes);
}

TEST_CASE("lift_word matches the tower") {
    CHECK(lift_word("T") == "TSt");
    CHECK(lift_word("t") == "Tst");
    CHECK(lift_word("T", 2) == tower_word(2));
    CHECK(lift_word("S") == "S");
}
