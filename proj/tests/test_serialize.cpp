#include <doctest.h>

#include "twopar/errors.hpp"
#include "twopar/serialize.hpp"

#include <cmath>

using namespace twopar;

TEST_CASE("complex literal parsing: exact forms") {
    auto p1 = parse_complex("1/2-1/2i");
    CHECK(!p1.had_decimal);
    CHECK(p1.value.is_exact());
    CHECK(p1.value.rat().re == mpq_class(1, 2));
    CHECK(p1.value.rat().im == mpq_class(-1, 2));

    CHECK(parse_complex("2i").value.rat().im == 2);
    CHECK(parse_complex("i").value.rat().im == 1);
    CHECK(parse_complex("-i").value.rat().im == -1);
    CHECK(parse_complex("3").value.rat().re == 3);
    CHECK(parse_complex("-7/3").value.rat().re == mpq_class(-7, 3));
    CHECK(parse_complex("1+2i").value.rat().im == 2);
    CHECK(parse_complex(" 1/2 + 1/3 i ").value.rat().im == mpq_class(1, 3));
}

TEST_CASE("complex literal parsing: floating and polar forms") {
    auto p1 = parse_complex("0.3");
    CHECK(p1.had_decimal);
    CHECK(!p1.value.is_exact());
    CHECK(p1.value.re() == 0.3);

    auto p2 = parse_complex("1.5-0.25i");
    CHECK(p2.value.im() == -0.25);

    auto p3 = parse_complex("2@1.5707963267948966"); // r = 2 at pi/2
    CHECK(std::abs(p3.value.re()) < 1e-12);
    CHECK(std::abs(p3.value.im() - 2.0) < 1e-12);

    CHECK(parse_complex("1e-3").value.re() == 1e-3);

    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("1/0"), ParseError);
    CHECK_THROWS_AS(parse_complex("2+3"), ParseError);
    CHECK_THROWS_AS(parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(parse_complex("1+2i+3i"), ParseError);
}

TEST_CASE("json for complex values uses the dual schema") {
    auto je = to_json(ComplexValue::exact(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(je["mode"] == "exact");
    CHECK(je["re_num"] == "1");
    CHECK(je["re_den"] == "2");
    CHECK(je["im_num"] == "-3");
    CHECK(je["im_den"] == "4");

    auto jf = to_json(ComplexValue::floating(0.5, -0.25));
    CHECK(jf["mode"] == "floating");
    CHECK(jf["re"] == 0.5);
}

TEST_CASE("region report json carries every field") {
    RegionReport r = classify(ComplexValue::exact(0, 2));
    auto j = to_json(r);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["classical_ts"] == "interior");
    CHECK(j.contains("ncf_member"));
    CHECK(j.contains("nsdc"));
    CHECK(j.contains("annulus_index"));
    CHECK(j.contains("discreteness"));
}

TEST_CASE("certificate json") {
    auto cert = certify(ComplexValue::exact(mpq_class(1, 2), mpq_class(-1, 2)));
    REQUIRE(cert);
    auto j = to_json(*cert);
    CHECK(j["kind"] == "DustAndNonfree");
    CHECK(j["depth"] == 1);
    CHECK(j["exactness"] == "exact");
    CHECK(j["verified"] == true);
    CHECK(j["witness_words"].size() == 2);
}

TEST_CASE("csv rows follow curve_id,kind,x,y") {
    CurveSet cs;
    cs.curves.push_back(schottky_parabolas(4)[0]);
    std::string csv = curves_to_csv(cs);
    CHECK(csv.rfind("curve_id,kind,x,y\n", 0) == 0);
    CHECK(csv.find("0,parabola,-2,") != std::string::npos);
}

TEST_CASE("svg output is deterministic and carries the fixed layers") {
    CurveSet named = named_boundaries(64);
    std::vector<std::pair<std::string, CurveSet>> layers = {{"jorgensen", named},
                                                            {"schottky", named}};
    std::string a = curves_to_svg(layers);
    std::string b = curves_to_svg(layers);
    CHECK(a == b);
    CHECK(a.find("<g id=\"jorgensen\"") != std::string::npos);
    CHECK(a.find("<g id=\"schottky\"") != std::string::npos);
    CHECK(a.find("<svg") == 0);
}

TEST_CASE("configuration json embeds verification") {
    SchottkyConfiguration cfg =
        build_configuration(ConfigCase::classical_interior, ComplexValue::exact(0, 2));
    VerifyReport rep = verify_configuration(cfg);
    auto j = to_json(cfg, rep);
    CHECK(j["case"] == "classical_interior");
    CHECK(j["verification"]["pairing_ok"] == true);
    CHECK(j["verification"]["tangency_count"] == 2);
}

TEST_CASE("trace identity report serializes") {
    MarkedGroup g = make_group(ComplexValue::exact(1));
    auto j = to_json(trace_identities(g));
    CHECK(j["all_pass"] == true);
    CHECK(j["tr_ST"]["re_num"] == "4");
}
