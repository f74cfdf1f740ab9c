#pragma once

#include <functional>
#include <optional>

#include "ecforge/family.hpp"
#include "ecforge/heights.hpp"
#include "ecforge/report.hpp"

namespace ecforge {

/// A regulator expectation tied to an explicit point set (usually the
/// points printed next to the worked example).
struct RegulatorCheck {
    std::string label;
    std::optional<WeierstrassCurve> on_curve;  // defaults to the built curve
    std::vector<CurvePoint> points;
    double expected = 0.0;  // 0: only certify a nonzero regulator
    double tolerance = 0.01;
    bool positive_only = false;  // value > 0 suffices (flagged entries)
};

struct ReproResult {
    std::string id;
    bool pass = true;
    std::vector<std::string> lines;
    Json report;
    double seconds = 0.0;

    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
    }
    void note(const std::string& what) { lines.push_back("  note " + what); }
};

/// One reproducible worked example: how to build it and what the source
/// text promises about the result.
struct ReproEntry {
    std::string id;
    char family;
    std::string params_text;
    std::function<FamilyInstance()> build;

    std::optional<WeierstrassCurve> expect_curve;
    bool exact_curve = false;   // otherwise certified via find_isomorphism
    std::optional<UniPoly> expect_quartic;
    std::vector<CurvePoint> paper_points;      // must lie on expect_curve exactly
    std::vector<Rational> paper_abscissae;     // membership via square RHS on expect_curve
    int expected_mapped_points = -1;
    std::vector<RegulatorCheck> reg_checks;
    std::vector<std::string> flags;            // known discrepancies in the source text
    std::function<void(const FamilyInstance&, ReproResult&, int, GramMode)> extra;
};

const std::vector<ReproEntry>& repro_registry();
const ReproEntry& repro_entry(const std::string& id);

ReproResult run_repro(const ReproEntry& entry, int doublings = 6,
                      GramMode mode = GramMode::Parallel);

}  // namespace ecforge
