#pragma once

#include <string>

#include <json.hpp>

#include "ordlim/level.hpp"
#include "ordlim/poset_map.hpp"
#include "ordlim/ternary.hpp"
#include "ordlim/threads.hpp"

namespace ordlim {

using Json = nlohmann::json;

// Poset schema: {"elements": [labels...], "le": [[i,j],...]} with indices
// into elements. Reflexive pairs may be omitted on input; output lists the
// strict pairs sorted. No transitive closure is inferred.
Json poset_to_json(const FinitePoset& p);
PosetPtr poset_from_json(const Json& j);

// Map schema: {"domain": <poset>, "codomain": <poset>, "assignment": [...]}.
Json map_to_json(const PosetMap& f);
PosetMap map_from_json(const Json& j);

Json level_map_to_json(const LevelMap& f);
LevelMap level_map_from_json(const Json& j, const LevelConfig& cfg);

// Thread-solver system: {"levels": [[labels...]|size,...], "steps": [[...],...]}.
FiniteSystem finite_system_from_json(const Json& j);

// Target system: {"levels": [<poset>...], "steps": [[assignment]...]}.
TargetSystem target_system_from_json(const Json& j);
Json family_to_json(const LevelMapFamily& family);
LevelMapFamily family_from_json(const Json& j, const LevelConfig& cfg);

// Ideal thread over the P-system: {"coords": [[element indices]...]}.
Json ideal_thread_to_json(const IdealThread& t);
IdealThread ideal_thread_from_json(const Json& j);

// Ternary schema: {"n": n, "values": {"<address>": 1|2, ...}}, zeros omitted.
Json ternary_to_json(const TernaryFunction& f);
TernaryFunction ternary_from_json(const Json& j);

// A subset of level n given as element indices: {"n": n, "members": [...]}.
Bits level_subset_from_json(const Json& j, int expected_n = -1);

Json bits_to_json(const Bits& b);

std::string to_dot(const FinitePoset& p);

Json parse_json_file(const std::string& path);

}  // namespace ordlim
