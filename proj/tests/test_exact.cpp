#include <doctest.h>

#include <random>

#include "ecforge/errors.hpp"
#include "ecforge/rational.hpp"
#include "ecforge/unipoly.hpp"

using namespace ecforge;

namespace {

Rational rnd_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return make_rational(Integer(num(rng)), Integer(den(rng)));
}

UniPoly rnd_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(rnd_rational(rng));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(to_string(parse_rational("22/7")) == "22/7");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("0/9")) == "0");
    CHECK(parse_rational("6/3") == Rational(2));
    CHECK_THROWS(parse_rational("1/0"));
    // canonical after arithmetic: positive denominator, reduced
    Rational q = make_rational(Integer(3), Integer(-6));
    CHECK(q.get_den() > 0);
    CHECK(to_string(q) == "-1/2");
}

TEST_CASE("rational arithmetic stays canonical on random inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = rnd_rational(rng), b = rnd_rational(rng);
        for (const Rational& r : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
            CHECK(g == (r == 0 ? r.get_den() : Integer(1)));
            CHECK(r.get_den() > 0);
        }
        if (b != 0) {
            Rational r = a / b;
            CHECK(r.get_den() > 0);
        }
    }
}

TEST_CASE("is_square") {
    CHECK(*rational_sqrt(Rational(9216)) == 96);
    CHECK(*rational_sqrt(Rational(0)) == 0);
    CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
    CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
    CHECK(*rational_sqrt(parse_rational("49/121")) == parse_rational("7/11"));
    // thousand-digit square round trip
    Integer big(1);
    for (int i = 0; i < 140; ++i) big *= 10000000;
    Integer n = big * 7 + 3;
    CHECK(*rational_sqrt(Rational(n * n)) == n);
    CHECK_FALSE(rational_sqrt(Rational(n * n + 1)).has_value());
}

TEST_CASE("poly eval") {
    UniPoly p({Rational(6226), Rational(-399), Rational(0), Rational(1)});
    CHECK(p.eval(Rational(-10)) == 9216);
    CHECK(p.eval(Rational(23)) == 9216);  // 96^2, the chord-sum point
    CHECK(UniPoly().eval(parse_rational("5/3")) == 0);
    CHECK(p.eval(parse_rational("1/2")) == parse_rational("48217/8"));
}

TEST_CASE("poly product evaluation homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        UniPoly p = rnd_poly(rng, 5), q = rnd_poly(rng, 5);
        Rational x = rnd_rational(rng);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("shift and dilation") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        UniPoly p = rnd_poly(rng, 6);
        Rational s = rnd_rational(rng), x = rnd_rational(rng);
        CHECK(p.shifted(s).eval(x) == p.eval(x + s));
        CHECK(p.dilated(s).eval(x) == p.eval(s * x));
    }
}

TEST_CASE("discriminant of the cubic model") {
    // oracle: -16(4A^3 + 27B^2) for x^3 + Ax + B
    UniPoly p({Rational(6226), Rational(-399), Rational(0), Rational(1)});
    CHECK(discriminant(p) == Rational(-12680292096));
    CHECK(discriminant(UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)})) == 0);
}

TEST_CASE("discriminant of a quartic with known roots") {
    // (x-1)(x-2)(x-3)(x-4): root-difference oracle gives
    // 16 * prod_{i<j} (r_i - r_j)^2 = 16 * 144 = 2304
    UniPoly p = product_of_linear({Rational(-1), Rational(-2), Rational(-3), Rational(-4)});
    CHECK(discriminant(p) == Rational(2304));
    CHECK_THROWS_AS(discriminant(UniPoly({Rational(1), Rational(1)})), UnsupportedDegree);
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
    // oracle: gcd(p, p') nontrivial <=> repeated root; over exact rationals
    // deg(gcd) > 0 iff the resultant of (p, p') vanishes
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> root(-4, 4);
    std::uniform_int_distribution<int> rep(0, 1);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> roots;
        const int deg = 3 + rep(rng);
        for (int j = 0; j < deg; ++j) roots.push_back(Rational(root(rng)));
        if (rep(rng)) roots[1] = roots[0];  // force a repeat half the time
        std::vector<Rational> negs;
        bool repeated = false;
        for (size_t a = 0; a < roots.size(); ++a) {
            for (size_t b = a + 1; b < roots.size(); ++b) repeated |= roots[a] == roots[b];
            negs.push_back(-roots[a]);
        }
        UniPoly p = product_of_linear(negs);
        CHECK((discriminant(p) == 0) == repeated);
    }
}
