#include "hcube/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "hcube/error.hpp"

namespace hcube::json_io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object containing \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

Index as_index(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<Index>();
}

std::string key_of(Index i) { return std::to_string(i); }

Sign sign_from_char(char c) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  throw InputError(std::string("sign characters must be '+' or '-', got '") + c + "'");
}

char char_of(Sign s) { return s == Sign::plus ? '+' : '-'; }

std::map<Index, Index> index_map_from_json(const Json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be an object");
  std::map<Index, Index> out;
  for (const auto& [key, value] : j.items()) out[parse_index_key(key)] = as_index(value, what);
  return out;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Index parse_index_key(const std::string& key) {
  Index value = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (key.empty() || key.front() == '-' || ec != std::errc{} || ptr != last || value < 1) {
    throw InputError("coordinate keys must be positive decimal integers, got \"" + key + "\"");
  }
  return value;
}

Json to_json(const Vertex& v) {
  Json overrides = Json::object();
  for (const auto& [i, s] : v.overrides()) overrides[key_of(i)] = std::string(1, char_of(s));
  return Json{{"period", v.period()}, {"pattern", v.pattern_string()}, {"overrides", overrides}};
}

Vertex vertex_from_json(const Json& j) {
  SignRule rule;
  rule.period = as_index(member(j, "period"), "period");
  const Json& pattern = member(j, "pattern");
  if (!pattern.is_string()) throw InputError("pattern must be a string of '+'/'-'");
  rule.pattern.clear();
  for (char c : pattern.get<std::string>()) rule.pattern.push_back(sign_from_char(c));
  if (auto it = j.find("overrides"); it != j.end()) {
    if (!it->is_object()) throw InputError("overrides must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string() || value.get<std::string>().size() != 1) {
        throw InputError("override values must be \"+\" or \"-\"");
      }
      rule.overrides[parse_index_key(key)] = sign_from_char(value.get<std::string>()[0]);
    }
  }
  return make_vertex(std::move(rule));
}

Json to_json(const SymplecticPerm& s) {
  Json moves = Json::object();
  for (const auto& [i, image] : s.moves()) moves[key_of(i)] = image;
  return Json{{"moves", moves}};
}

Json to_json(const WreathPair& w) {
  Json perm = Json::object();
  for (const auto& [i, j] : w.perm) perm[key_of(i)] = j;
  Json signs = Json::object();
  for (Index k : w.negated) signs[key_of(k)] = -1;
  return Json{{"perm", perm}, {"signs", signs}};
}

SymplecticPerm perm_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("permutation must be a JSON object");
  if (j.contains("moves")) {
    if (j.contains("perm") || j.contains("signs")) throw InputError("permutation mixes direct and wreath forms");
    return SymplecticPerm::from_moves(index_map_from_json(j.at("moves"), "moves"));
  }
  if (!j.contains("perm") && !j.contains("signs")) throw InputError("permutation needs \"moves\" or \"perm\"/\"signs\"");
  WreathPair w;
  if (j.contains("perm")) {
    for (const auto& [i, target] : index_map_from_json(j.at("perm"), "perm")) {
      if (target < 1) throw InputError("wreath permutation targets must be positive");
      if (i != target) w.perm[i] = target;
    }
  }
  if (j.contains("signs")) {
    for (const auto& [k, sign] : index_map_from_json(j.at("signs"), "signs")) {
      if (sign == -1) {
        w.negated.insert(k);
      } else if (sign != 1) {
        throw InputError("wreath signs must be -1 or 1");
      }
    }
  }
  return from_wreath(w);
}

AutomorphismOracle oracle_from_json(const Json& j) {
  const Json& type = member(j, "type");
  if (!type.is_string()) throw InputError("oracle type must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "regular") return AutomorphismOracle::regular(perm_from_json(member(j, "perm")));
  if (kind == "piecewise") {
    const Json& cases = member(j, "cases");
    if (!cases.is_array()) throw InputError("piecewise cases must be an array");
    std::vector<PiecewiseCase> out;
    for (const Json& c : cases) {
      out.push_back({vertex_from_json(member(c, "component_rep")), perm_from_json(member(c, "perm"))});
    }
    return AutomorphismOracle::piecewise(std::move(out));
  }
  if (kind == "patched") {
    // A base oracle with individual images overridden. Used to describe
    // deliberately broken maps.
    AutomorphismOracle base = oracle_from_json(member(j, "base"));
    const Json& images = member(j, "images");
    if (!images.is_array()) throw InputError("patched images must be an array");
    std::map<Vertex, Vertex> table;
    for (const Json& entry : images) {
      if (!table.emplace(vertex_from_json(member(entry, "from")), vertex_from_json(member(entry, "to"))).second) {
        throw InputError("patched oracle lists the same vertex twice");
      }
    }
    return AutomorphismOracle::callback([base = std::move(base), table = std::move(table)](const Vertex& v) {
      auto it = table.find(v);
      return it == table.end() ? base(v) : it->second;
    });
  }
  throw InputError("unknown oracle type \"" + kind + "\"");
}

Json to_json(const ReconstructionResult& r) {
  Json action = Json::object();
  for (const auto& [i, image] : r.action) action[key_of(i)] = image;
  Json checked = Json::array();
  for (const Vertex& v : r.consistency_checked_at) checked.push_back(to_json(v));
  return Json{{"window", r.window}, {"action", action}, {"queries", r.oracle_query_count}, {"checked_at", checked}};
}

Json to_json(const RegularityVerdict& v, std::span<const Vertex> reps) {
  if (!v.witness) return Json{{"verdict", "consistent_within_window"}};
  const NonRegularWitness& w = *v.witness;
  return Json{{"verdict", "non_regular"},
              {"witness",
               {{"index", w.index},
                {"components", Json::array({to_json(reps[w.first_rep]), to_json(reps[w.second_rep])})},
                {"images", Json::array({w.first_image, w.second_image})}}}};
}

Json to_json(const CubeAutomorphism& a) {
  Json map = Json::object();
  for (CubeVertex u = 0; u < a.vertex_map.size(); ++u) map[bits_of(u, a.n)] = bits_of(a.vertex_map[u], a.n);
  return Json{{"n", a.n}, {"map", map}};
}

CubeAutomorphism cube_automorphism_from_json(const Json& j) {
  const Index n = as_index(member(j, "n"), "n");
  if (n < 1 || n > FiniteCube::max_dimension) throw InputError("cube dimension out of range");
  CubeAutomorphism a{static_cast<int>(n), std::vector<CubeVertex>(std::size_t{1} << n)};
  std::vector<bool> seen(a.vertex_map.size(), false);
  const Json& map = member(j, "map");
  if (!map.is_object()) throw InputError("cube map must be an object");
  for (const auto& [from, to] : map.items()) {
    if (!to.is_string() || from.size() != static_cast<std::size_t>(n) || to.get<std::string>().size() != from.size()) {
      throw InputError("cube map entries must be " + std::to_string(n) + "-bit strings");
    }
    const CubeVertex u = cube_vertex_from_bits(from);
    if (seen[u]) throw InputError("cube map lists " + from + " twice");
    seen[u] = true;
    a.vertex_map[u] = cube_vertex_from_bits(to.get<std::string>());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError("cube map is not total");
  return a;
}

}  // namespace hcube::json_io
