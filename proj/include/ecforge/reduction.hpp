#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "ecforge/curve.hpp"

namespace ecforge {

// A ModelMap is a chain of primitive steps. Every step maps points of its
// source model onto its target model exactly; composing the chain carries a
// point from the original model to the final Weierstrass curve.

/// x = p X + q, y = r Y + s X + t (p, r != 0). Invertible.
struct LinearStep {
    Rational p, q, r, s, t;
    CurvePoint forward(const CurvePoint& pt) const;
    CurvePoint backward(const CurvePoint& pt) const;
};

/// x = 1/X, y = Y/X^2. Sends a quartic y^2 = c4 x^4 + ... + c1 x (zero
/// constant term) to the cubic Y^2 = c1 X^3 + c2 X^2 + c3 X + c4.
struct InversionStep {
    CurvePoint forward(const CurvePoint& pt) const;
};

/// Classical reduction of y^2 = quartic via a rational base point with
/// nonzero ordinate. The base point blows up to the point at infinity.
struct BasePointStep {
    Rational x0, q;          // base point (x0, q), q != 0, on the source quartic
    Rational a, b, c, d;     // translated quartic a u^4 + b u^3 + c u^2 + d u + q^2
    Rational mu, B;          // mu = (c - d^2/(4q^2))/(2q), B = b - d mu / q
    CurvePoint forward(const CurvePoint& pt) const;
};

/// Classical reduction of y^2 = alpha^2 x^4 + b x^3 + c x^2 + d x + e.
/// Keeps every affine point finite.
struct SquareLeadStep {
    Rational alpha, b, c, d;  // quartic coefficients, leading = alpha^2
    Rational mu, R;           // mu = (c - b^2/(4 alpha^2))/(2 alpha), R = d - b mu / alpha
    CurvePoint forward(const CurvePoint& pt) const;
};

/// Weierstrass (u,r,s,t) change of variables, as produced by find_isomorphism.
struct IsoStep {
    WeierstrassIso iso;
    CurvePoint forward(const CurvePoint& pt) const { return iso.forward(pt); }
    CurvePoint backward(const CurvePoint& pt) const { return iso.backward(pt); }
};

using MapStep = std::variant<LinearStep, InversionStep, BasePointStep, SquareLeadStep, IsoStep>;

struct ModelMap {
    std::vector<MapStep> steps;

    /// Maps a point of the source model to the final curve. Throws
    /// UndefinedMap when pt is a blown-up base point of a quartic reduction.
    CurvePoint apply(const CurvePoint& pt) const;
    /// Inverts the chain where every step is invertible (Linear/Iso only).
    CurvePoint apply_inverse(const CurvePoint& pt) const;
    bool invertible() const;
    void append(const ModelMap& tail);
};

struct Reduction {
    WeierstrassCurve curve;
    ModelMap map;
};

/// Linear substitution x = X/c3, y = Y/c3 onto a monic model
/// Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2.
Reduction cubic_to_weierstrass(const GeneralCubic& g);

enum class QuarticStrategy { Auto, SquareLead, ZeroConstant, BasePoint };

/// Birational reduction of a quartic model to the reduced Jacobian
/// Y^2 = X^3 - 27I X - 27J (cleared of p^4/p^6 prime-power content).
/// Strategy order: square leading coefficient, zero constant term, then the
/// supplied base point. Throws NoRationalPoint when nothing applies.
Reduction quartic_to_weierstrass(const QuarticModel& q,
                                 const CurvePoint& base = CurvePoint::at_infinity(),
                                 QuarticStrategy strategy = QuarticStrategy::Auto);

/// y^2 = x^3 + Ax + B isomorphic to the input, with A, B integers and no
/// prime p <= 10^5 with p^4 | A and p^6 | B. Returns the curve and the scale
/// u with x = u^2 X.
struct ReducedShortForm {
    WeierstrassCurve curve;
    Rational u;
};
ReducedShortForm reduce_short_form(const Rational& A, const Rational& B);

/// The reduced Jacobian of a quartic plus the iso from `from` onto it.
Reduction jacobian_of(const QuarticModel& q, const WeierstrassCurve& from);

}  // namespace ecforge
