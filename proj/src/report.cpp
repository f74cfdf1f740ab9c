#include "ecforge/report.hpp"

#include <sstream>

#include "ecforge/errors.hpp"

namespace ecforge {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const CurvePoint& p) {
    if (p.infinity) return "infinity";
    return Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}};
}

Json to_json(const WeierstrassCurve& e) {
    return Json{{"a", Json::array({to_string(e.a1), to_string(e.a2), to_string(e.a3),
                                   to_string(e.a4), to_string(e.a6)})}};
}

Json to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

Json to_json(const HeightValue& h) {
    return Json{{"value", h.value.str()}, {"error", h.error.str(6)}};
}

Json to_json(const IndependenceReport& rep) {
    Json gram = Json::array();
    for (const auto& row : rep.gram) {
        Json r = Json::array();
        for (const auto& h : row) r.push_back(h.value.str());
        gram.push_back(r);
    }
    Json heights = Json::array();
    for (size_t i = 0; i < rep.gram.size(); ++i) heights.push_back(to_json(rep.gram[i][i]));
    return Json{{"points", rep.points.size()},
                {"per_point_heights", heights},
                {"gram", gram},
                {"regulator", to_json(rep.regulator)},
                {"certified_independent", rep.certified_independent},
                {"torsion_bound", to_string(rep.torsion_bound)},
                {"doublings", rep.doublings},
                {"convention", rep.convention}};
}

Json to_json(const FamilyInstance& inst) {
    Json points = Json::array(), model_points = Json::array(), provenance = Json::array();
    for (const auto& p : inst.points) {
        points.push_back(to_json(p.pt));
        provenance.push_back(p.provenance);
    }
    for (const auto& p : inst.model_points) model_points.push_back(to_json(p.pt));
    return Json{{"family", std::string(1, family_letter(inst.family))},
                {"phi", to_json(inst.phi)},
                {"model", inst.model_is_quartic ? "quartic" : "cubic"},
                {"curve", to_json(inst.weierstrass)},
                {"model_points", model_points},
                {"points", points},
                {"provenance", provenance},
                {"notes", inst.notes}};
}

Json to_json(const IdentityReport& rep) {
    return Json{{"ok", rep.ok}, {"checks", rep.checks.size()}, {"failures", rep.failures}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    return parse_rational(j.get<std::string>());
}

CurvePoint point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "infinity") return CurvePoint::at_infinity();
    return CurvePoint(rational_from_json(j.at("x")), rational_from_json(j.at("y")));
}

WeierstrassCurve curve_from_json(const Json& j) {
    const auto& a = j.at("a");
    if (a.size() != 5) throw Error("curve needs exactly [a1,a2,a3,a4,a6]");
    return WeierstrassCurve(rational_from_json(a[0]), rational_from_json(a[1]),
                            rational_from_json(a[2]), rational_from_json(a[3]),
                            rational_from_json(a[4]));
}

namespace {

void render(std::ostream& os, const Json& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v[0].is_string() &&
                                  !v[0].is_number())) {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) render(os, v, indent);
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

}  // namespace ecforge
