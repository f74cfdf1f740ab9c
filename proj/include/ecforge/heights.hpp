#pragma once

#include <vector>

#include "ecforge/bigfloat.hpp"
#include "ecforge/curve.hpp"

namespace ecforge {

/// A real quantity with a (heuristic) error bound: the true value is
/// expected in [value - error, value + error].
struct HeightValue {
    BigFloat value;
    BigFloat error;
    Interval interval() const { return Interval::around(value, error); }
};

/// log max(|num(x)|, den(x)) for the x-coordinate in lowest terms.
/// Throws InfinityPoint on the point at infinity.
BigFloat naive_height(const CurvePoint& p);

/// Canonical height estimate lim 4^-n h(x(2^n P)) by exact repeated
/// doubling. Error is the geometric-tail bound |est_n - est_{n-1}|/3, kept
/// monotone under refinement. Torsion points detected en route give exact 0.
///
/// Normalization: this is the x-coordinate height WITHOUT the factor 1/2;
/// the half-pairing below makes the Gram determinant reproduce the
/// regulators printed by the software the examples were checked with.
HeightValue canonical_height(const WeierstrassCurve& e, const CurvePoint& p, int doublings = 6);

/// <P,Q> = (h(P+Q) - h(P) - h(Q)) / 2, errors propagated.
HeightValue pairing(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q,
                    int doublings = 6);

enum class GramMode { Serial, Parallel };

struct IndependenceReport {
    std::vector<CurvePoint> points;
    std::vector<std::vector<HeightValue>> gram;
    HeightValue regulator;
    bool certified_independent = false;
    Integer torsion_bound;  // 0 when not computed
    int doublings = 0;
    std::string convention = "x-height, half-pairing";
};

/// Gram matrix of height pairings, regulator as its determinant with
/// interval error propagation, and the independence certificate. Entries are
/// independent work items; Parallel runs them under OpenMP and returns
/// bit-identical results to Serial.
IndependenceReport gram_regulator(const WeierstrassCurve& e,
                                  const std::vector<CurvePoint>& points, int doublings = 6,
                                  GramMode mode = GramMode::Parallel);

/// Interval determinant by Laplace expansion shared over column subsets
/// (O(2^m m) interval operations; fine through m = 13).
Interval interval_determinant(const std::vector<std::vector<Interval>>& m);
BigFloat determinant(const std::vector<std::vector<BigFloat>>& m);

struct SubsetRegulator {
    HeightValue regulator;
    bool certified_independent = false;
};

/// Regulator of the sub-lattice spanned by the chosen rows/columns of an
/// existing Gram matrix (no new height computations).
SubsetRegulator subset_regulator(const IndependenceReport& rep, const std::vector<int>& indices);

}  // namespace ecforge
