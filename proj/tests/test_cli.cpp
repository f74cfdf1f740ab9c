#include <doctest.h>

#include "ecforge/report.hpp"

using namespace ecforge;

TEST_CASE("report values round-trip through JSON without loss") {
    Rational q = parse_rational("-123456789123456789123456789/987654321987654321");
    CHECK(rational_from_json(to_json(q)) == q);

    CurvePoint p(parse_rational("22/7"), parse_rational("-5"));
    CHECK(point_from_json(to_json(p)) == p);
    CHECK(point_from_json(to_json(CurvePoint::at_infinity())).infinity);

    WeierstrassCurve e(Rational(1), Rational(-1), Rational(0),
                       parse_rational("-47739269184667111896"),
                       parse_rational("34123010787688902778640228336"));
    WeierstrassCurve back = curve_from_json(to_json(e));
    CHECK(back == e);
}

TEST_CASE("instance report schema") {
    Sec2Solution sol;
    sol.a0 = 96;
    sol.a = {Rational(10), Rational(13), Rational(-23)};
    sol.b0 = 66;
    sol.b = {Rational(-17), Rational(-5), Rational(22)};
    auto inst = build_family_A(sol);
    Json j = to_json(inst);
    CHECK(j.at("family") == "A");
    CHECK(j.at("phi").size() == 4);
    CHECK(j.at("points").size() == 6);
    CHECK(j.at("provenance").size() == 6);
    CHECK(j.at("curve").at("a").size() == 5);
    // machine- and human-readable renderings expose the same values
    std::string text = render_text(j);
    CHECK(text.find("6226") != std::string::npos);
    CHECK(text.find("-399") != std::string::npos);
}

TEST_CASE("big integers serialize as decimal strings") {
    Json j = to_json(parse_rational("537211144047153364926448357254872490627314988850400537154755515461210216146647438"));
    CHECK(j.is_string());
    CHECK(rational_from_json(j) ==
          parse_rational("537211144047153364926448357254872490627314988850400537154755515461210216146647438"));
}
