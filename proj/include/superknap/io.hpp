#pragma once

#include "superknap/apps.hpp"
#include "superknap/core.hpp"
#include "superknap/greedy.hpp"
#include "superknap/linear_system.hpp"

#include <json.hpp>

#include <string>

namespace superknap {

using Json = nlohmann::ordered_json;

// Integers travel as decimal strings; plain JSON integers are accepted on input.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

Json instance_to_json(const KnapsackInstance& inst);
KnapsackInstance instance_from_json(const Json& j);

Json polytope_to_json(const HPolytope& poly);
HPolytope polytope_from_json(const Json& j);

// {"theta": [...], "support": [1-based indices]}
Json profile_to_json(const GreedyProfile& gp);

Json mixed_to_json(const MixedInstance& mi);
MixedInstance mixed_from_json(const Json& j);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// One row per line: packing rows, then covering rows, then the rest.
std::string render_polytope(const HPolytope& poly, const VarNamer& name = default_var_name);

}  // namespace superknap
