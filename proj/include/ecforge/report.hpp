#pragma once

#include <json.hpp>

#include "ecforge/family.hpp"
#include "ecforge/heights.hpp"

namespace ecforge {

using Json = nlohmann::ordered_json;

// All integers in reports are decimal strings; rationals are "num/den".
Json to_json(const Rational& q);
Json to_json(const CurvePoint& p);
Json to_json(const WeierstrassCurve& e);
Json to_json(const UniPoly& p);
Json to_json(const HeightValue& h);
Json to_json(const IndependenceReport& rep);
Json to_json(const FamilyInstance& inst);
Json to_json(const IdentityReport& rep);

Rational rational_from_json(const Json& j);
CurvePoint point_from_json(const Json& j);
WeierstrassCurve curve_from_json(const Json& j);

/// Human-readable rendering of the same report content.
std::string render_text(const Json& report);

}  // namespace ecforge
