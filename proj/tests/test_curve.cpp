#include <doctest.h>

#include <random>

#include "ecforge/errors.hpp"
#include "ecforge/reduction.hpp"

using namespace ecforge;

namespace {

Rational R(const char* s) { return parse_rational(s); }

const WeierstrassCurve& curve399() {
    static const WeierstrassCurve e = WeierstrassCurve::short_form(Rational(-399), Rational(6226));
    return e;
}

}  // namespace

TEST_CASE("on_curve") {
    const auto& e = curve399();
    CHECK(e.contains(CurvePoint(Rational(-10), Rational(96))));
    CHECK(e.contains(CurvePoint::at_infinity()));
    CHECK_FALSE(e.contains(CurvePoint(Rational(0), Rational(1))));
}

TEST_CASE("chord addition on the worked curve") {
    const auto& e = curve399();
    CurvePoint p(Rational(-10), Rational(96)), q(Rational(-13), Rational(96));
    CurvePoint r = e.add(p, q);
    CHECK(r == CurvePoint(Rational(23), Rational(-96)));
    CHECK(e.add(p, CurvePoint::at_infinity()) == p);
    CHECK(e.add(p, e.negate(p)).infinity);
    CHECK(e.dbl(CurvePoint::at_infinity()).infinity);
}

TEST_CASE("doubling matches the tangent formula") {
    const auto& e = curve399();
    CurvePoint p(Rational(-10), Rational(96));
    CurvePoint d = e.dbl(p);
    const Rational lambda = (3 * p.x * p.x - 399) / (2 * p.y);
    CHECK(d.x == lambda * lambda - 2 * p.x);
    CHECK(e.contains(d));
    CHECK(d == e.add(p, p));
}

TEST_CASE("mul") {
    const auto& e = curve399();
    CurvePoint p(Rational(5), Rational(66));
    CHECK(e.mul(Integer(1), p) == p);
    CHECK(e.mul(Integer(0), p).infinity);
    CHECK(e.mul(Integer(-3), p) == e.negate(e.mul(Integer(3), p)));
    CHECK(e.mul(Integer(5), p) ==
          e.add(e.mul(Integer(2), p), e.add(e.mul(Integer(2), p), p)));
}

TEST_CASE("group law axioms on random small multiples, long form included") {
    // a curve with a1, a3 nonzero exercises every term of the formulas
    WeierstrassCurve e(Rational(1), Rational(-1), Rational(1), Rational(-3), Rational(3));
    CurvePoint g(Rational(1), Rational(0));
    REQUIRE(e.contains(g));
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> k(-6, 6);
    for (int i = 0; i < 100; ++i) {
        CurvePoint p = e.mul(Integer(k(rng)), g);
        CurvePoint q = e.mul(Integer(k(rng)), g);
        CurvePoint r = e.mul(Integer(k(rng)), g);
        CHECK(e.add(e.add(p, q), r) == e.add(p, e.add(q, r)));
        CHECK(e.add(p, q) == e.add(q, p));
        CHECK(e.add(p, e.negate(p)).infinity);
        CHECK(e.add(p, CurvePoint::at_infinity()) == p);
    }
}

TEST_CASE("c4, c6, discriminant identities") {
    const auto& e = curve399();
    CHECK(e.c4() == -48 * Rational(-399));
    CHECK(e.c6() == -864 * Rational(6226));
    CHECK(e.discriminant() == Rational(-12680292096));  // 16 disc of the cubic
    // 1728 disc = c4^3 - c6^2 on assorted curves
    for (const auto& c : {WeierstrassCurve(R("1"), R("-1"), R("0"), R("-47739269184667111896"),
                                           R("34123010787688902778640228336")),
                          WeierstrassCurve(R("0"), R("0"), R("1"), R("-78654091314536101"),
                                           R("4993138309311379361023650")),
                          WeierstrassCurve(R("1/2"), R("3"), R("-2/7"), R("5"), R("9"))}) {
        CHECK(1728 * c.discriminant() == c.c4() * c.c4() * c.c4() - c.c6() * c.c6());
    }
    CHECK_THROWS_AS(WeierstrassCurve(R("0"), R("0"), R("0"), R("0"), R("0")), Degenerate);
}

TEST_CASE("find_isomorphism") {
    const auto& e = curve399();
    // u-scaling
    WeierstrassCurve scaled =
        WeierstrassCurve::short_form(Rational(-399) * 16, Rational(6226) * 64);
    auto iso = find_isomorphism(scaled, e);
    REQUIRE(iso.has_value());
    CHECK(iso->u == 2);
    CHECK(iso->r == 0);
    // identity
    auto self = find_isomorphism(e, e);
    REQUIRE(self.has_value());
    CHECK(self->u == 1);
    CHECK(self->r == 0);
    // non-isomorphic pair: u^6 = 1/2 has no rational solution
    auto none = find_isomorphism(WeierstrassCurve::short_form(Rational(0), Rational(1)),
                                 WeierstrassCurve::short_form(Rational(0), Rational(2)));
    CHECK_FALSE(none.has_value());
}

TEST_CASE("find_isomorphism reproduces the printed minimal-model map") {
    WeierstrassCurve big(R("0"), R("0"), R("0"), R("-1136261157571019728659411"),
                         R("466685506089477132791551368731316450"));
    WeierstrassCurve minimal(R("0"), R("1"), R("0"), R("-958125505468762024"),
                             R("361360495869188941993242116"));
    auto iso = find_isomorphism(big, minimal);
    REQUIRE(iso.has_value());
    CHECK(iso->u == 33);   // x = 1089 X + 363
    CHECK(iso->r == 363);
    CHECK(iso->s == 0);
    CHECK(iso->t == 0);
    // consistency: transported points stay on the target curve
    CurvePoint p(R("641648531"), R("3279574736568"));
    REQUIRE(minimal.contains(p));
    CurvePoint back = iso->backward(p);
    CHECK(big.contains(back));
    CHECK(iso->forward(back) == p);
}

TEST_CASE("cubic_to_weierstrass") {
    // y^2 = 4x^3 + 1 -> Y^2 = X^3 + 16 under X = 4x, Y = 4y
    GeneralCubic g(UniPoly({R("1"), R("0"), R("0"), R("4")}));
    auto red = cubic_to_weierstrass(g);
    CHECK(red.curve == WeierstrassCurve::short_form(Rational(0), Rational(16)));
    CurvePoint p(Rational(0), Rational(1));
    REQUIRE(g.contains(p));
    CurvePoint image = red.map.apply(p);
    CHECK(red.curve.contains(image));
    CHECK(image == CurvePoint(Rational(0), Rational(4)));
    CHECK(red.map.apply_inverse(image) == p);

    // already monic: the map must stay the identity
    GeneralCubic monic(UniPoly({R("1"), R("1"), R("0"), R("1")}));
    auto red2 = cubic_to_weierstrass(monic);
    CurvePoint q(Rational(0), Rational(1));
    CHECK(red2.map.apply(q) == q);
}

TEST_CASE("quartic reduction via the square leading coefficient") {
    // the section-2 quartic: leading coefficient 1
    UniPoly phi({R("91785556686276"), R("-460748288"), R("-4768608"), R("0"), R("1")});
    QuarticModel q(phi);
    auto red = quartic_to_weierstrass(q);
    CHECK(red.curve ==
          WeierstrassCurve::short_form(R("-23420131301937"), R("18114867816009096080")));
    std::vector<CurvePoint> pts;
    for (const char* x : {"1940", "1076", "-1324", "-1692"})
        pts.emplace_back(R(x), R("9333234"));
    for (const char* x : {"2196", "356", "-460", "-2092"})
        pts.emplace_back(R(x), R("9541134"));
    for (const auto& p : pts) {
        REQUIRE(q.contains(p));
        CHECK(red.curve.contains(red.map.apply(p)));  // all 8 survive
    }
}

TEST_CASE("quartic reduction via a base point") {
    UniPoly phi({R("6210528187439825204004"), R("-3211739790886292400"),
                 R("-10273867756103916"), R("2608103498364"), R("4834227853")});
    QuarticModel q(phi);
    CurvePoint base(R("-780"), R("54925180902"));
    REQUIRE(q.contains(base));
    auto red = quartic_to_weierstrass(q, base);
    CHECK(red.curve == WeierstrassCurve::short_form(R("-10228318920208466879353470719100"),
                                                    R("12588116153737599336213325703794679840709018225")));
    CHECK_THROWS_AS(red.map.apply(base), UndefinedMap);  // blown-up base
    // the opposite-ordinate companion of the base still maps somewhere finite
    CurvePoint opp(R("-780"), R("-54925180902"));
    CHECK(red.curve.contains(red.map.apply(opp)));
}

TEST_CASE("quartic reduction via the zero constant term") {
    // x(x+1)(x+2)(x+3), inverted to the cubic Y^2 = 6X^3 + 11X^2 + 6X + 1
    UniPoly phi = product_of_linear({R("0"), R("1"), R("2"), R("3")});
    QuarticModel q(phi);
    auto red = quartic_to_weierstrass(q);
    CHECK(red.curve.discriminant() != 0);
    for (const char* x : {"-1", "-2", "-3"}) {
        CurvePoint p(R(x), Rational(0));
        REQUIRE(q.contains(p));
        CHECK(red.curve.contains(red.map.apply(p)));
    }
    // x = 0 is the one point the inversion loses
    CHECK_THROWS_AS(red.map.apply(CurvePoint(Rational(0), Rational(0))), UndefinedMap);
}

TEST_CASE("no strategy applies") {
    // leading coefficient 2 (not a square), constant 1, no base point given
    UniPoly phi({R("1"), R("1"), R("0"), R("0"), R("2")});
    QuarticModel q(phi);
    CHECK_THROWS_AS(quartic_to_weierstrass(q), NoRationalPoint);
}

TEST_CASE("reduce_short_form strips prime powers and clears denominators") {
    auto r = reduce_short_form(R("-399/16"), R("6226/64"));
    // u = 1/2: A u^-4 = -399 * 16 / 16 ... the reduced pair is the minimal one
    CHECK(r.curve.a4 == -399);
    CHECK(r.curve.a6 == 6226);
    auto r2 = reduce_short_form(Rational(-399) * 16, Rational(6226) * 64);
    CHECK(r2.curve.a4 == -399);
    CHECK(r2.curve.a6 == 6226);
    CHECK(r2.u == 2);
}

TEST_CASE("model maps round-trip where invertible") {
    std::mt19937_64 rng(41);
    const auto& e = curve399();
    WeierstrassCurve target(R("0"), R("1"), R("0"), R("-958125505468762024"),
                            R("361360495869188941993242116"));
    std::uniform_int_distribution<long> k(1, 5);
    auto iso = find_isomorphism(
        WeierstrassCurve(R("0"), R("0"), R("0"), R("-1136261157571019728659411"),
                         R("466685506089477132791551368731316450")),
        target);
    REQUIRE(iso.has_value());
    ModelMap chain{{IsoStep{*iso}}};
    CHECK(chain.invertible());
    CurvePoint p(R("641648531"), R("3279574736568"));
    CHECK(chain.apply(chain.apply_inverse(p)) == p);
}
