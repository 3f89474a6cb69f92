#include "ordlim/json_io.hpp"

#include <fstream>

namespace ordlim {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) fail_parse(msg);
}

}  // namespace

Json poset_to_json(const FinitePoset& p) {
  Json j;
  j["elements"] = p.labels();
  Json le = Json::array();
  for (auto [i, k] : p.strict_pairs()) le.push_back({i, k});
  j["le"] = std::move(le);
  return j;
}

PosetPtr poset_from_json(const Json& j) {
  require(j.is_object() && j.contains("elements") && j.contains("le"),
          "poset JSON needs \"elements\" and \"le\"");
  PosetData data;
  for (const auto& e : j.at("elements")) {
    require(e.is_string(), "poset elements must be strings");
    data.labels.push_back(e.get<std::string>());
  }
  for (const auto& pair : j.at("le")) {
    require(pair.is_array() && pair.size() == 2 && pair[0].is_number_integer() && pair[1].is_number_integer(),
            "poset \"le\" entries must be [i, j] index pairs");
    data.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return FinitePoset::make(std::move(data));
}

Json map_to_json(const PosetMap& f) {
  Json j;
  j["domain"] = poset_to_json(f.domain());
  j["codomain"] = poset_to_json(f.codomain());
  j["assignment"] = f.assignment();
  return j;
}

PosetMap map_from_json(const Json& j) {
  require(j.is_object() && j.contains("domain") && j.contains("codomain") && j.contains("assignment"),
          "map JSON needs \"domain\", \"codomain\" and \"assignment\"");
  PosetPtr dom = poset_from_json(j.at("domain"));
  PosetPtr cod = poset_from_json(j.at("codomain"));
  std::vector<int> assignment;
  for (const auto& v : j.at("assignment")) {
    require(v.is_number_integer(), "assignment entries must be integers");
    assignment.push_back(v.get<int>());
  }
  return PosetMap::make(std::move(dom), std::move(cod), std::move(assignment));
}

Json level_map_to_json(const LevelMap& f) {
  Json j;
  j["level"] = f.level;
  j["codomain"] = poset_to_json(*f.codomain);
  j["values"] = f.values;
  return j;
}

LevelMap level_map_from_json(const Json& j, const LevelConfig& cfg) {
  require(j.is_object() && j.contains("level") && j.contains("codomain") && j.contains("values"),
          "level map JSON needs \"level\", \"codomain\" and \"values\"");
  LevelMap f;
  f.level = j.at("level").get<int>();
  if (f.level < 1 || f.level > cfg.depth_bound) fail("level map outside depth bound");
  f.codomain = poset_from_json(j.at("codomain"));
  for (const auto& v : j.at("values")) f.values.push_back(v.get<std::int32_t>());
  UniversalLevel lvl(f.level);
  require(f.values.size() == lvl.size(), "level map has the wrong number of values");
  for (auto v : f.values)
    require(v >= 0 && v < f.codomain->size(), "level map value outside codomain");
  return f;
}

FiniteSystem finite_system_from_json(const Json& j) {
  require(j.is_object() && j.contains("levels") && j.contains("steps"),
          "system JSON needs \"levels\" and \"steps\"");
  FiniteSystem sys;
  for (const auto& level : j.at("levels")) {
    std::vector<std::string> labels;
    if (level.is_number_integer()) {
      for (int i = 0; i < level.get<int>(); ++i) labels.push_back("g" + std::to_string(i));
    } else {
      require(level.is_array(), "system levels must be label arrays or sizes");
      for (const auto& l : level) labels.push_back(l.get<std::string>());
    }
    sys.levels.push_back(std::move(labels));
  }
  for (const auto& step : j.at("steps")) {
    require(step.is_array(), "system steps must be arrays");
    std::vector<int> vals;
    for (const auto& v : step) vals.push_back(v.get<int>());
    sys.steps.push_back(std::move(vals));
  }
  sys.validate();
  return sys;
}

TargetSystem target_system_from_json(const Json& j) {
  require(j.is_object() && j.contains("levels") && j.contains("steps"),
          "target system JSON needs \"levels\" and \"steps\"");
  TargetSystem ts;
  for (const auto& level : j.at("levels")) ts.levels.push_back(poset_from_json(level));
  std::size_t idx = 0;
  for (const auto& step : j.at("steps")) {
    require(idx + 1 < ts.levels.size(), "too many steps for the levels");
    std::vector<int> vals;
    for (const auto& v : step) vals.push_back(v.get<int>());
    ts.steps.push_back(PosetMap::make(ts.levels[idx + 1], ts.levels[idx], std::move(vals)));
    ++idx;
  }
  ts.validate();
  return ts;
}

Json family_to_json(const LevelMapFamily& family) {
  Json j;
  j["indices"] = family.indices;
  Json maps = Json::array();
  for (const LevelMap& m : family.maps) maps.push_back(level_map_to_json(m));
  j["maps"] = std::move(maps);
  return j;
}

LevelMapFamily family_from_json(const Json& j, const LevelConfig& cfg) {
  require(j.is_object() && j.contains("indices") && j.contains("maps"),
          "family JSON needs \"indices\" and \"maps\"");
  LevelMapFamily family;
  for (const auto& i : j.at("indices")) family.indices.push_back(i.get<int>());
  for (const auto& m : j.at("maps")) family.maps.push_back(level_map_from_json(m, cfg));
  require(family.indices.size() == family.maps.size(), "family indices and maps must align");
  for (std::size_t l = 0; l < family.maps.size(); ++l) {
    require(family.maps[l].level == family.indices[l], "family map level differs from its index");
    require(l == 0 || family.indices[l] > family.indices[l - 1], "family indices must increase");
  }
  return family;
}

Json ideal_thread_to_json(const IdealThread& t) {
  Json coords = Json::array();
  for (const Bits& c : t.coords) coords.push_back(c.to_indices());
  Json j;
  j["coords"] = std::move(coords);
  return j;
}

IdealThread ideal_thread_from_json(const Json& j) {
  require(j.is_object() && j.contains("coords"), "ideal thread JSON needs \"coords\"");
  IdealThread t;
  int n = 1;
  for (const auto& coord : j.at("coords")) {
    Bits b(std::size_t(1) << (2 * n));
    for (const auto& v : coord) {
      long long idx = v.get<long long>();
      require(idx >= 0 && idx < static_cast<long long>(b.size()),
              "ideal thread member outside level " + std::to_string(n));
      b.set(static_cast<std::size_t>(idx));
    }
    t.coords.push_back(std::move(b));
    ++n;
  }
  require(!t.coords.empty(), "ideal thread must have at least one coordinate");
  return t;
}

Json ternary_to_json(const TernaryFunction& f) {
  ComponentIndex t(f.n);
  Json values = Json::object();
  for (std::uint64_t rank = 0; rank < t.size(); ++rank)
    if (f.values[rank]) values[t.word(rank)] = f.values[rank];
  Json j;
  j["n"] = f.n;
  j["values"] = std::move(values);
  return j;
}

TernaryFunction ternary_from_json(const Json& j) {
  require(j.is_object() && j.contains("n"), "ternary JSON needs \"n\"");
  int n = j.at("n").get<int>();
  ComponentIndex t(n);
  TernaryFunction f = ternary_zero(n);
  if (j.contains("values")) {
    for (const auto& [key, value] : j.at("values").items()) {
      auto rank = t.parse_word(key);
      require(rank.has_value(), "ternary address \"" + key + "\" is not in T_" + std::to_string(n));
      int v = value.get<int>();
      require(v >= 0 && v <= 2, "ternary values must be 0, 1 or 2");
      f.values[*rank] = static_cast<std::uint8_t>(v);
    }
  }
  return f;
}

Bits level_subset_from_json(const Json& j, int expected_n) {
  require(j.is_object() && j.contains("n") && j.contains("members"),
          "level subset JSON needs \"n\" and \"members\"");
  int n = j.at("n").get<int>();
  require(expected_n < 0 || n == expected_n, "level subset depth mismatch");
  require(n >= 1 && n <= kLevelHardBound, "level subset depth outside supported range");
  Bits b(std::size_t(1) << (2 * n));
  for (const auto& v : j.at("members")) {
    long long idx = v.get<long long>();
    require(idx >= 0 && idx < static_cast<long long>(b.size()), "level subset member out of range");
    b.set(static_cast<std::size_t>(idx));
  }
  return b;
}

Json bits_to_json(const Bits& b) { return Json(b.to_indices()); }

std::string to_dot(const FinitePoset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + p.label(i) + "\"];\n";
  for (auto [i, j] : p.hasse_edges())
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail_parse(std::string("JSON parse error in ") + path + ": " + e.what());
  }
}

}  // namespace ordlim
