#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecforge/curve.hpp"
#include "ecforge/dioph.hpp"
#include "ecforge/reduction.hpp"

namespace ecforge {

enum class FamilyId { A, B, C, D, E, F, G };
char family_letter(FamilyId id);
FamilyId family_from_letter(char c);

struct PointRecord {
    CurvePoint pt;
    std::string provenance;  // which abscissa produced it: "-a1", "k*c2", "+h", ...
};

/// One assembled construction: the model polynomial phi, the rational points
/// built into it, the reduced Weierstrass curve and the exact point map.
using SourceData =
    std::variant<std::monostate, Sec2Solution, TripleChain, QuadChain, SexticPair, Fam5Solution>;

struct FamilyInstance {
    FamilyId family;
    std::vector<Rational> params;
    SourceData source;
    UniPoly phi;            // y^2 = phi(x), denominators cleared by a square
    bool model_is_quartic;  // otherwise cubic
    WeierstrassCurve weierstrass;
    ModelMap map;                           // phi-model -> weierstrass
    std::vector<PointRecord> model_points;  // on y^2 = phi
    std::vector<PointRecord> points;        // images on weierstrass
    std::vector<std::string> notes;         // e.g. the base point lost under reduction

    FamilyInstance(FamilyId f, WeierstrassCurve w) : family(f), weierstrass(std::move(w)) {}
};

/// pi_i, s and the transformation scale of the 3.1 construction.
struct FamCData {
    std::array<Rational, 4> pi;
    Rational s;
    Rational k;  // 2(g1 g2 g3), the abscissa scale of the displayed model
};

FamilyInstance build_family_A(const Sec2Solution& sol);
FamilyInstance build_family_B(const Sec2Solution& sol);
FamilyInstance build_family_C(const TripleChain& chain);

/// roles permutes (a, b, c) before the construction ("by interchanging the
/// quadruples"); base_index selects the reduction base among the 12 points.
FamilyInstance build_family_D(const QuadChain& chain, const std::array<int, 3>& roles = {0, 1, 2},
                              int base_index = 0);
FamilyInstance build_family_E(const SexticPair& pair);
FamilyInstance build_family_F(const SexticPair& pair);
FamilyInstance build_family_G(const Fam5Solution& sol);

struct IdentityReport {
    bool ok = true;
    std::vector<std::string> checks;    // description of each identity verified
    std::vector<std::string> failures;  // nonempty only when ok is false
};

/// Expands both sides of the instance's defining identity exactly for its
/// concrete data. With trials > 0 additionally rebuilds the family at that
/// many random rational parameter tuples and re-verifies (declared
/// degeneracies are skipped, anything else failing is reported).
IdentityReport verify_identity(const FamilyInstance& inst, int trials = 0, unsigned seed = 1);

/// The family C data (pi products, s, k) for a chain.
FamCData fam_c_data(const TripleChain& chain);

}  // namespace ecforge
