#pragma once

#include <json.hpp>

#include "gtx/classification.hpp"
#include "gtx/induced.hpp"
#include "gtx/localization.hpp"

namespace gtx {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Tableau& t);
json to_json(const ShiftVector& z);
json to_json(const BasisElement& b);
json to_json(const TableauVector& v);
json to_json(const Window& w);
json to_json(const ModuleSpec& spec);
json to_json(const ClosureReport& r);
json to_json(const RelationReport& r);
json to_json(const WeightCensus& census);
json to_json(const FamilyReport& r);
json to_json(const LocalizationLemmaReport& r);

Rational rational_from_json(const json& j);
Tableau tableau_from_json(const json& j);
ModuleSpec module_spec_from_json(const json& j);

} // namespace gtx
