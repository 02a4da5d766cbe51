#include <doctest.h>

#include "helpers.hpp"
#include "twopar/errors.hpp"
#include "twopar/regions.hpp"

#include <cmath>

using namespace twopar;

namespace {
ComplexValue q(long n, long d = 1) { return ComplexValue::exact(mpq_class(n, d), mpq_class(0)); }
ComplexValue qi(long rn, long rd, long in, long id) {
    return ComplexValue::exact(mpq_class(rn, rd), mpq_class(in, id));
}
} // namespace

TEST_CASE("classical region membership") {
    CHECK(in_classical_ts(qi(0, 1, 1, 1)) == ClassicalTs::boundary); // i on the parabola
    CHECK(in_classical_ts(q(3)) == ClassicalTs::interior);
    CHECK(in_classical_ts(qi(1, 2, 1, 2)) == ClassicalTs::outside);
    CHECK(in_classical_ts(q(2)) == ClassicalTs::boundary);
    CHECK(in_classical_ts(q(-2)) == ClassicalTs::boundary);
    CHECK(in_classical_ts(qi(0, 1, 2, 1)) == ClassicalTs::interior);
    CHECK(in_classical_ts(qi(1, 1, 3, 4)) == ClassicalTs::boundary); // 1 + (3/4)i on the arc
}

TEST_CASE("nsdc membership") {
    CHECK(in_nsdc(q(2)) == NsdcRegion::boundary);
    CHECK(in_nsdc(qi(0, 1, 4, 1)) == NsdcRegion::boundary);  // 4i: 16 = 16
    CHECK(in_nsdc(qi(0, 1, 5, 1)) == NsdcRegion::exterior_region);
    CHECK(in_nsdc(qi(0, 1, 1, 1)) == NsdcRegion::inside);
    CHECK(in_nsdc(q(3)) == NsdcRegion::exterior_region); // beyond x = 2, by convention
}

TEST_CASE("ncf membership") {
    // r = 1, theta = 5 pi / 12: in the first-quadrant sector piece
    double th = 5.0 * M_PI / 12.0;
    ComplexValue on_arc = ComplexValue::floating(std::cos(th), std::sin(th));
    CHECK(in_ncf(on_arc) == NcfTag::A1);
    // a touch outside the unit circle, same sector, still below the parabola
    ComplexValue inside = ComplexValue::floating(1.004 * std::cos(th), 1.004 * std::sin(th));
    CHECK(in_ncf(inside) == NcfTag::A1);

    CHECK(!in_ncf(q(1)));          // below the K-line
    CHECK(!in_ncf(qi(1, 4, 1, 4))); // deep inside the hull
    CHECK(!in_ncf(qi(0, 1, 3, 1))); // classical interior, above the parabola

    // reflected copies
    CHECK(in_ncf(on_arc.conj()) == NcfTag::conjA1);
    CHECK(in_ncf(-on_arc) == NcfTag::negA1);
    CHECK(in_ncf(-(on_arc.conj())) == NcfTag::negConjA1);

    // K-line membership: exact rational points on it are only (2, 0);
    // a floating point on the segment qualifies through the A2 inequalities
    const double s3 = std::sqrt(3.0);
    ComplexValue on_k = ComplexValue::floating(1.2, s3 * (2.0 - 1.2) / 3.0);
    CHECK(in_ncf(on_k) == NcfTag::A2);
    CHECK(in_ncf(q(2)) == NcfTag::A2);          // included endpoint of K0
    CHECK(in_ncf(qi(0, 1, 1, 1)) == NcfTag::A1); // included arc endpoint i
    CHECK(in_ncf(qi(0, 1, -1, 1)) == NcfTag::conjA1);
}

TEST_CASE("classify: reference points") {
    RegionReport r1 = classify(qi(0, 1, 2, 1)); // 2i
    CHECK(r1.classical_ts == ClassicalTs::interior);
    CHECK(!r1.jorgensen_interior);
    CHECK(r1.nth_classical == 0);
    CHECK(r1.discreteness == Discreteness::discrete);

    RegionReport r2 = classify(q(3, 10)); // 0.3
    CHECK(r2.jorgensen_interior);
    CHECK(!r2.nth_classical);
    CHECK(r2.diamond_member);
    CHECK(r2.discreteness == Discreteness::non_discrete);
    CHECK(!r2.annulus_index);

    for (long s : {2L, -2L}) {
        RegionReport r = classify(q(s));
        CHECK(r.classical_ts == ClassicalTs::boundary);
        REQUIRE(r.special_boundary_point);
        CHECK(*r.special_boundary_point ==
              (s > 0 ? SpecialPoint::plus_two : SpecialPoint::minus_two));
    }
    for (long s : {1L, -1L}) {
        RegionReport r = classify(qi(0, 1, s, 1));
        CHECK(r.classical_ts == ClassicalTs::boundary);
        REQUIRE(r.special_boundary_point);
        CHECK(*r.special_boundary_point == (s > 0 ? SpecialPoint::plus_i : SpecialPoint::minus_i));
    }
    CHECK_THROWS_AS(classify(q(0)), ZeroLambda);
}

TEST_CASE("classify consistency: nth_classical = 0 iff in the closed region") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int i = 0; i < 200; ++i) {
        ComplexValue lam = ComplexValue::floating(u(rng), u(rng));
        if (lam.abs() < 1e-6) continue;
        RegionReport r = classify(lam);
        bool in_region = r.classical_ts != ClassicalTs::outside;
        CHECK((r.nth_classical && *r.nth_classical == 0) == in_region);
    }
}

TEST_CASE("classify: indeterminate strip") {
    RegionReport r = classify(qi(0, 1, 3, 5)); // 0.6i: outside Jorgensen, inside parabola
    CHECK(!r.jorgensen_interior);
    CHECK(r.classical_ts == ClassicalTs::outside);
    CHECK(r.discreteness == Discreteness::indeterminate);
    RegionReport rc = classify(q(1, 2)); // on the Jorgensen circle
    CHECK(!rc.jorgensen_interior);
    // the reason code for the missing index is surfaced
    bool noted = false;
    for (const auto& n : rc.notes) noted = noted || n == "on_jorgensen_circle";
    CHECK(noted);
}

TEST_CASE("region flags are symmetric under both reflections") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int i = 0; i < 120; ++i) {
        ComplexValue lam = ComplexValue::floating(u(rng), u(rng));
        if (lam.abs() < 1e-6) continue;
        RegionReport base = classify(lam);
        for (ComplexValue v : {-lam, lam.conj(), -(lam.conj())}) {
            RegionReport r = classify(v);
            CHECK(r.jorgensen_interior == base.jorgensen_interior);
            CHECK(r.classical_ts == base.classical_ts);
            CHECK(r.nsdc == base.nsdc);
            CHECK(static_cast<bool>(r.ncf_member) == static_cast<bool>(base.ncf_member));
            CHECK(r.diamond_member == base.diamond_member);
            CHECK(r.lox_par_generators == base.lox_par_generators);
            CHECK(r.nth_classical == base.nth_classical);
            CHECK(r.annulus_index == base.annulus_index);
            CHECK(static_cast<bool>(r.special_boundary_point) ==
                  static_cast<bool>(base.special_boundary_point));
        }
    }
}

TEST_CASE("diamond and loxodromic-parabolic flags") {
    RegionReport a = classify(qi(1, 2, -1, 2));
    CHECK(a.diamond_member); // |1/2| + |1/2| = 1
    CHECK(!a.lox_par_generators);
    RegionReport b = classify(qi(3, 2, 1, 1));
    CHECK(!b.diamond_member);
    CHECK(b.lox_par_generators); // 3/2 + 1 >= 2
}
