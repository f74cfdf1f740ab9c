#include "ecforge/curve.hpp"

#include <sstream>

#include "ecforge/errors.hpp"

namespace ecforge {

std::string CurvePoint::str() const {
    if (infinity) return "infinity";
    return "(" + to_string(x) + ", " + to_string(y) + ")";
}

WeierstrassCurve::WeierstrassCurve(Rational a1_, Rational a2_, Rational a3_, Rational a4_,
                                   Rational a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
      a6(std::move(a6_)) {
    if (discriminant() == 0) throw Degenerate("singular Weierstrass equation");
}

WeierstrassCurve WeierstrassCurve::short_form(Rational A, Rational B) {
    return WeierstrassCurve(Rational(0), Rational(0), Rational(0), std::move(A), std::move(B));
}

Rational WeierstrassCurve::discriminant() const {
    const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

bool WeierstrassCurve::contains(const CurvePoint& p) const {
    if (p.infinity) return true;
    return p.y * p.y + a1 * p.x * p.y + a3 * p.y ==
           p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& p) const {
    if (p.infinity) return p;
    return CurvePoint(p.x, -p.y - a1 * p.x - a3);
}

CurvePoint WeierstrassCurve::add(const CurvePoint& p, const CurvePoint& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rational lambda, nu;
    if (p.x == q.x) {
        if (q.y == -p.y - a1 * p.x - a3) return CurvePoint::at_infinity();
        // tangent line at p
        const Rational den = 2 * p.y + a1 * p.x + a3;
        lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / den;
        nu = (-p.x * p.x * p.x + a4 * p.x + 2 * a6 - a3 * p.y) / den;
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
        nu = p.y - lambda * p.x;
    }
    Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    Rational y3 = -(lambda + a1) * x3 - nu - a3;
    return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint WeierstrassCurve::mul(const Integer& n, const CurvePoint& p) const {
    if (n < 0) return mul(-n, negate(p));
    CurvePoint acc = CurvePoint::at_infinity();
    CurvePoint base = p;
    for (size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
        acc = dbl(acc);
        if (mpz_tstbit(n.get_mpz_t(), bit)) acc = add(acc, base);
    }
    return acc;
}

std::string WeierstrassCurve::str() const {
    std::ostringstream os;
    os << "y^2";
    if (a1 != 0) os << " + " << to_string(a1) << "*xy";
    if (a3 != 0) os << " + " << to_string(a3) << "*y";
    os << " = x^3";
    auto term = [&os](const Rational& c, const char* mono) {
        if (c == 0) return;
        os << (c > 0 ? " + " : " - ") << to_string(abs(c)) << mono;
    };
    term(a2, "*x^2");
    term(a4, "*x");
    term(a6, "");
    return os.str();
}

QuarticModel::QuarticModel(UniPoly phi) : phi_(std::move(phi)) {
    if (phi_.degree() != 4) throw UnsupportedDegree("quartic model needs degree exactly 4");
    if (discriminant(phi_) == 0) throw Degenerate("quartic with repeated root");
}

Rational QuarticModel::invariant_I() const {
    const Rational a = phi_[4], b = phi_[3], c = phi_[2], d = phi_[1], e = phi_[0];
    return 12 * a * e - 3 * b * d + c * c;
}

Rational QuarticModel::invariant_J() const {
    const Rational a = phi_[4], b = phi_[3], c = phi_[2], d = phi_[1], e = phi_[0];
    return 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c * c * c;
}

GeneralCubic::GeneralCubic(UniPoly phi) : phi_(std::move(phi)) {
    if (phi_.degree() != 3) throw UnsupportedDegree("general cubic needs degree exactly 3");
    if (discriminant(phi_) == 0) throw Degenerate("cubic with repeated root");
}

CurvePoint WeierstrassIso::forward(const CurvePoint& p) const {
    if (p.infinity) return p;
    const Rational xp = (p.x - r) / (u * u);
    const Rational yp = (p.y - s * (p.x - r) - t) / (u * u * u);
    return CurvePoint(xp, yp);
}

CurvePoint WeierstrassIso::backward(const CurvePoint& p) const {
    if (p.infinity) return p;
    const Rational x = u * u * p.x + r;
    const Rational y = u * u * u * p.y + s * u * u * p.x + t;
    return CurvePoint(x, y);
}

std::optional<WeierstrassIso> find_isomorphism(const WeierstrassCurve& e1,
                                               const WeierstrassCurve& e2) {
    const Rational c41 = e1.c4(), c61 = e1.c6();
    const Rational c42 = e2.c4(), c62 = e2.c6();
    Rational u2;
    if (c42 != 0 && c62 != 0) {
        if (c41 == 0 || c61 == 0) return std::nullopt;
        u2 = (c61 * c42) / (c62 * c41);
    } else if (c42 == 0 && c41 == 0) {
        auto root = rational_cbrt(c61 / c62);
        if (!root) return std::nullopt;
        u2 = *root;
    } else if (c62 == 0 && c61 == 0) {
        auto root = rational_sqrt(c41 / c42);
        if (!root) return std::nullopt;
        u2 = *root;
    } else {
        return std::nullopt;
    }
    if (u2 <= 0) return std::nullopt;
    auto u0 = rational_sqrt(u2);
    if (!u0) return std::nullopt;
    for (const Rational& u : {*u0, Rational(-*u0)}) {
        const Rational s = (u * e2.a1 - e1.a1) / 2;
        const Rational r = (u * u * e2.a2 - e1.a2 + s * e1.a1 + s * s) / 3;
        const Rational t = (u * u * u * e2.a3 - e1.a3 - r * e1.a1) / 2;
        const bool ok4 = u * u * u * u * e2.a4 ==
                         e1.a4 - s * e1.a3 + 2 * r * e1.a2 - (t + r * s) * e1.a1 + 3 * r * r -
                             2 * s * t;
        const Rational u6 = u * u * u * u * u * u;
        const bool ok6 = u6 * e2.a6 == e1.a6 + r * e1.a4 + r * r * e1.a2 + r * r * r - t * e1.a3 -
                                           t * t - r * t * e1.a1;
        if (ok4 && ok6) return WeierstrassIso{u, r, s, t};
    }
    return std::nullopt;
}

}  // namespace ecforge
