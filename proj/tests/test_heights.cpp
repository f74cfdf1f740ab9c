#include <doctest.h>

#include <random>

#include "ecforge/errors.hpp"
#include "ecforge/family.hpp"
#include "ecforge/heights.hpp"
#include "ecforge/torsion.hpp"

using namespace ecforge;

namespace {

Rational R(const char* s) { return parse_rational(s); }

const WeierstrassCurve& curve399() {
    static const WeierstrassCurve e = WeierstrassCurve::short_form(Rational(-399), Rational(6226));
    return e;
}

double d(const BigFloat& x) { return x.to_double(); }

}  // namespace

TEST_CASE("naive height") {
    CHECK(d(naive_height(CurvePoint(Rational(23), Rational(-96)))) ==
          doctest::Approx(std::log(23.0)));
    CHECK(d(naive_height(CurvePoint(Rational(-10), Rational(96)))) ==
          doctest::Approx(std::log(10.0)));
    CHECK(d(naive_height(CurvePoint(R("2648646"), R("1785505722")))) ==
          doctest::Approx(std::log(2648646.0)));
    CHECK(d(naive_height(CurvePoint(R("1/3"), R("1")))) == doctest::Approx(std::log(3.0)));
    CHECK_THROWS_AS(naive_height(CurvePoint::at_infinity()), InfinityPoint);
}

TEST_CASE("canonical height basics") {
    const auto& e = curve399();
    auto h0 = canonical_height(e, CurvePoint::at_infinity());
    CHECK(h0.value.is_zero());
    CHECK(h0.error.is_zero());

    CurvePoint p(Rational(-10), Rational(96));
    auto hp = canonical_height(e, p, 6);
    CHECK(d(hp.value) > 0);
    CHECK(d(hp.error) >= 0);
    // quadraticity within combined error
    auto h2p = canonical_height(e, e.dbl(p), 6);
    CHECK(std::abs(d(h2p.value) - 4 * d(hp.value)) <= d(h2p.error) + 4 * d(hp.error) + 1e-20);
}

TEST_CASE("two-torsion has height zero") {
    // y^2 = x^3 - x has full rational 2-torsion
    WeierstrassCurve e = WeierstrassCurve::short_form(Rational(-1), Rational(0));
    for (long x : {-1L, 0L, 1L}) {
        auto h = canonical_height(e, CurvePoint(Rational(x), Rational(0)), 6);
        CHECK(h.value.is_zero());  // doubling hits infinity, exact zero
    }
}

TEST_CASE("pairing") {
    const auto& e = curve399();
    CurvePoint p(Rational(-10), Rational(96)), q(Rational(5), Rational(66));
    auto hp = canonical_height(e, p, 6);
    auto pp = pairing(e, p, p, 6);
    CHECK(d(pp.value) == d(hp.value));  // same computation path
    auto pq = pairing(e, p, q, 6);
    auto qp = pairing(e, q, p, 6);
    CHECK(d(pq.value) == doctest::Approx(d(qp.value)).epsilon(1e-12));
    // <P, -P> = -h(P) within error
    auto pm = pairing(e, p, e.negate(p), 6);
    CHECK(std::abs(d(pm.value) + d(hp.value)) <= d(pm.error) + d(hp.error) + 1e-9);
    // <P, O> = -... pairing with infinity: h(P+O) - h(P) - 0 = 0
    auto po = pairing(e, p, CurvePoint::at_infinity(), 6);
    CHECK(std::abs(d(po.value)) <= 1e-30);
}

TEST_CASE("parallelogram law within propagated error") {
    const auto& e = curve399();
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> k(1, 4);
    CurvePoint g1(Rational(-10), Rational(96)), g2(Rational(5), Rational(66));
    for (int i = 0; i < 10; ++i) {
        CurvePoint p = e.mul(Integer(k(rng)), g1);
        CurvePoint q = e.mul(Integer(k(rng)), g2);
        auto hs = canonical_height(e, e.add(p, q), 6);
        auto hd = canonical_height(e, e.add(p, e.negate(q)), 6);
        auto hp = canonical_height(e, p, 6);
        auto hq = canonical_height(e, q, 6);
        const double lhs = d(hs.value) + d(hd.value);
        const double rhs = 2 * d(hp.value) + 2 * d(hq.value);
        const double err =
            d(hs.error) + d(hd.error) + 2 * d(hp.error) + 2 * d(hq.error) + 1e-6;
        CHECK(std::abs(lhs - rhs) <= err);
    }
}

TEST_CASE("monotone refinement of the error bound") {
    const auto& e = curve399();
    CurvePoint p(Rational(-13), Rational(96));
    double prev = 1e300;
    for (int n = 2; n <= 8; ++n) {
        auto h = canonical_height(e, p, n);
        CHECK(d(h.error) <= prev + 1e-30);
        prev = d(h.error);
    }
}

TEST_CASE("regulator of a single point and of a dependent pair") {
    const auto& e = curve399();
    CurvePoint p(Rational(-10), Rational(96));
    auto single = gram_regulator(e, {p}, 6, GramMode::Serial);
    CHECK(d(single.regulator.value) == d(canonical_height(e, p, 6).value));
    CHECK(single.certified_independent);

    auto dep = gram_regulator(e, {p, e.dbl(p)}, 6, GramMode::Serial);
    CHECK(dep.regulator.interval().contains_zero());
    CHECK_FALSE(dep.certified_independent);

    auto with_o = gram_regulator(e, {p, CurvePoint::at_infinity()}, 6, GramMode::Serial);
    CHECK(with_o.regulator.interval().contains_zero());
    CHECK_FALSE(with_o.certified_independent);
}

TEST_CASE("serial and parallel gram are bit-identical") {
    const auto& e = curve399();
    std::vector<CurvePoint> pts{CurvePoint(Rational(-10), Rational(96)),
                                CurvePoint(Rational(-13), Rational(96)),
                                CurvePoint(Rational(5), Rational(66)),
                                CurvePoint(Rational(17), Rational(66))};
    auto s = gram_regulator(e, pts, 5, GramMode::Serial);
    auto p = gram_regulator(e, pts, 5, GramMode::Parallel);
    CHECK(s.regulator.value == p.regulator.value);
    CHECK(s.regulator.error == p.regulator.error);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            CHECK(s.gram[i][j].value == p.gram[i][j].value);
            CHECK(s.gram[i][j].error == p.gram[i][j].error);
        }
    CHECK(s.certified_independent == p.certified_independent);
    CHECK(s.certified_independent);  // the four worked-example points
}

TEST_CASE("interval determinant brackets the exact determinant") {
    // integer matrix with known determinant
    std::vector<std::vector<double>> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    std::vector<std::vector<BigFloat>> mid(3, std::vector<BigFloat>(3));
    std::vector<std::vector<Interval>> box(3, std::vector<Interval>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mid[i][j] = BigFloat(m[i][j]);
            box[i][j] = Interval::around(BigFloat(m[i][j]), BigFloat(0.01));
        }
    // det = 2(12-1) - 1(4-0) = 18
    CHECK(d(determinant(mid)) == doctest::Approx(18.0));
    auto idet = interval_determinant(box);
    CHECK(d(idet.lo) < 18.0);
    CHECK(d(idet.hi) > 18.0);
    CHECK(d(idet.width()) < 1.0);
}

TEST_CASE("subset regulator extraction") {
    const auto& e = curve399();
    CurvePoint p(Rational(-10), Rational(96)), q(Rational(5), Rational(66));
    auto rep = gram_regulator(e, {p, q, e.dbl(p)}, 6, GramMode::Serial);
    CHECK_FALSE(rep.certified_independent);  // contains a dependent triple
    auto sub = subset_regulator(rep, {0, 1});
    CHECK(sub.certified_independent);
}

TEST_CASE("torsion bound") {
    // y^2 = x^3 - x: full 2-torsion, bound divisible by 4
    WeierstrassCurve t2 = WeierstrassCurve::short_form(Rational(-1), Rational(0));
    Integer b = torsion_bound(t2, 4);
    CHECK(b % 4 == 0);
    // deterministic across runs and modes
    CHECK(torsion_bound(t2, 4) == b);
    CHECK(torsion_bound(t2, 4, CountMode::Parallel) == b);

    // the worked 3.1 curve has trivial torsion
    WeierstrassCurve c1 =
        WeierstrassCurve::short_form(R("-22064074044012"), R("43046837966291058900"));
    CHECK(torsion_bound(c1, 8) == 1);

    CHECK_THROWS_AS(torsion_bound(WeierstrassCurve::short_form(R("-1/4"), R("1")), 4),
                    NotIntegral);
    CHECK(count_points_mod_p(t2, 5, CountMode::Serial) ==
          count_points_mod_p(t2, 5, CountMode::Parallel));
}

TEST_CASE("integral model scaling") {
    WeierstrassCurve frac(R("1/2"), R("3"), R("-2/7"), R("5"), R("9"));
    WeierstrassCurve integral = integral_model(frac);
    for (const Rational* a :
         {&integral.a1, &integral.a2, &integral.a3, &integral.a4, &integral.a6})
        CHECK(is_integer(*a));
    auto iso = find_isomorphism(integral, frac);
    CHECK(iso.has_value());
}

TEST_CASE("quadraticity across families (random multiples of built-ins)") {
    auto inst = build_family_C(te2_chains(R("5"), R("-1"), R("7"), R("1"), R("11"), R("15")));
    const auto& e = inst.weierstrass;
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<size_t> pick(0, inst.points.size() - 1);
    for (int i = 0; i < 6; ++i) {
        CurvePoint p = inst.points[pick(rng)].pt;
        auto hp = canonical_height(e, p, 5);
        auto h2p = canonical_height(e, e.dbl(p), 5);
        CHECK(std::abs(d(h2p.value) - 4 * d(hp.value)) <=
              d(h2p.error) + 4 * d(hp.error) + 1e-9);
    }
}
