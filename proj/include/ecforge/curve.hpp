#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecforge/rational.hpp"
#include "ecforge/unipoly.hpp"

namespace ecforge {

/// Rational point: affine (x, y) or the point at infinity.
struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    CurvePoint() = default;
    CurvePoint(Rational px, Rational py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static CurvePoint at_infinity() { return CurvePoint(); }

    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    std::string str() const;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonzero discriminant.
class WeierstrassCurve {
  public:
    Rational a1, a2, a3, a4, a6;

    WeierstrassCurve(Rational a1_, Rational a2_, Rational a3_, Rational a4_, Rational a6_);
    /// y^2 = x^3 + A x + B
    static WeierstrassCurve short_form(Rational A, Rational B);

    Rational b2() const { return a1 * a1 + 4 * a2; }
    Rational b4() const { return 2 * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + 4 * a6; }
    Rational b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Rational c4() const { return b2() * b2() - 24 * b4(); }
    Rational c6() const {
        const Rational B2 = b2();
        return -B2 * B2 * B2 + 36 * B2 * b4() - 216 * b6();
    }
    Rational discriminant() const;
    Rational j_invariant() const { return c4() * c4() * c4() / discriminant(); }

    bool contains(const CurvePoint& p) const;
    CurvePoint negate(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint dbl(const CurvePoint& p) const { return add(p, p); }
    CurvePoint mul(const Integer& n, const CurvePoint& p) const;

    bool operator==(const WeierstrassCurve& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }
    std::string str() const;
};

/// y^2 = c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0 with c4 != 0 and nonzero
/// quartic discriminant.
class QuarticModel {
  public:
    explicit QuarticModel(UniPoly phi);
    const UniPoly& phi() const { return phi_; }
    const Rational& coeff(int i) const { return phi_[i]; }
    bool contains(const CurvePoint& p) const {
        return !p.infinity && p.y * p.y == phi_.eval(p.x);
    }
    /// Invariants I, J of the binary quartic; the Jacobian
    /// Y^2 = X^3 - 27 I X - 27 J is the associated Weierstrass curve.
    Rational invariant_I() const;
    Rational invariant_J() const;

  private:
    UniPoly phi_;
};

/// y^2 = c3 x^3 + c2 x^2 + c1 x + c0 with c3 != 0, nonzero discriminant.
class GeneralCubic {
  public:
    explicit GeneralCubic(UniPoly phi);
    const UniPoly& phi() const { return phi_; }
    bool contains(const CurvePoint& p) const {
        return !p.infinity && p.y * p.y == phi_.eval(p.x);
    }

  private:
    UniPoly phi_;
};

/// Standard change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
/// taking E to E'. Searched for via the c4/c6 ratios and the coefficient
/// equations; absent means not isomorphic by such a transformation.
struct WeierstrassIso {
    Rational u, r, s, t;
    /// E-coordinates -> E'-coordinates.
    CurvePoint forward(const CurvePoint& p) const;
    CurvePoint backward(const CurvePoint& p) const;
};

std::optional<WeierstrassIso> find_isomorphism(const WeierstrassCurve& e1,
                                               const WeierstrassCurve& e2);

}  // namespace ecforge
