#pragma once

#include "json.hpp"

#include "folding.hpp"
#include "seed.hpp"

namespace grassfold {

using Json = nlohmann::ordered_json;

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json quiver_to_json(const Quiver& q);

// {"k","n","vertices":[{"id","pos","frozen","label":[[...]]}],"arrows":[[u,v,m]]}
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json record_to_json(const ExchangeRecord& rec);

// Positive exponents on the lhs, negated negative exponents on the rhs:
// {"lhs":[[indices, exp], ...], "rhs":[[indices, exp], ...]}
Json equation_to_json(const EquationForm& eq);

Json schedule_to_json(const Schedule& sched);

std::string seed_to_dot(const Seed& s);

} // namespace grassfold
