#include "shadecalc/curve_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "shadecalc/errors.hpp"

namespace shadecalc {

namespace {

using nlohmann::json;

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError(where + ": unknown field '" + k + "'");
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::string text_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(where + ": expected a string or integer");
}

Ambient parse_ambient(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "P3") return Ambient::p3();
    throw ParseError("ambient: expected \"P3\" or {\"Q3\": {\"c\": ...}}");
  }
  only_keys(j, {"Q3"}, "ambient");
  const json& q = field(j, "Q3", "ambient");
  only_keys(q, {"c"}, "ambient.Q3");
  try {
    return Ambient::q3(parse_rational(text_of(field(q, "c", "ambient.Q3"), "ambient.Q3.c")));
  } catch (const ParseError& e) {
    throw ParseError(std::string("ambient.Q3.c: ") + e.what());
  }
}

CurveComponent parse_component(const json& j, std::size_t index) {
  const std::string where = "components[" + std::to_string(index) + "]";
  only_keys(j, {"label", "degree", "coords"}, where);
  std::string label = j.contains("label") ? text_of(j["label"], where + ".label") : "C" + std::to_string(index);
  const json& coords = field(j, "coords", where);
  if (!coords.is_array()) throw ParseError(where + ".coords: expected an array of coefficient arrays");
  std::vector<BinaryForm> forms;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const std::string cw = where + ".coords[" + std::to_string(k) + "]";
    if (!coords[k].is_array() || coords[k].empty()) throw ParseError(cw + ": expected a nonempty array");
    std::vector<Scalar> c;
    for (std::size_t m = 0; m < coords[k].size(); ++m) {
      try {
        c.push_back(Scalar::parse(text_of(coords[k][m], cw)));
      } catch (const ParseError& e) {
        throw ParseError(cw + "[" + std::to_string(m) + "]: " + e.what());
      }
    }
    int d = static_cast<int>(c.size()) - 1;
    forms.emplace_back(d, std::move(c));
  }
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) throw ParseError(where + ".degree: expected an integer");
    int d = j["degree"].get<int>();
    for (std::size_t k = 0; k < forms.size(); ++k)
      if (forms[k].degree() != d)
        throw ParseError(where + " ('" + label + "'): coords[" + std::to_string(k) + "] has degree " +
                         std::to_string(forms[k].degree()) + ", declared degree is " + std::to_string(d));
  }
  return CurveComponent(label, std::move(forms));
}

}  // namespace

CurveModel parse_curve(const std::string& text, bool check) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, {"ambient", "components", "family", "fixture_center"}, "curve");
  CurveModel m;
  m.ambient = parse_ambient(field(j, "ambient", "curve"));
  const json& comps = field(j, "components", "curve");
  if (!comps.is_array()) throw ParseError("components: expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) m.components.push_back(parse_component(comps[i], i));
  if (j.contains("family")) {
    const json& f = j["family"];
    only_keys(f, {"name", "parameters"}, "family");
    FamilyInfo info;
    info.name = text_of(field(f, "name", "family"), "family.name");
    if (f.contains("parameters")) {
      if (!f["parameters"].is_object()) throw ParseError("family.parameters: expected an object");
      for (const auto& [k, v] : f["parameters"].items()) info.parameters[k] = text_of(v, "family.parameters." + k);
    }
    m.family = info;
  }
  if (j.contains("fixture_center")) {
    const json& c = j["fixture_center"];
    if (!c.is_array()) throw ParseError("fixture_center: expected an array");
    for (std::size_t k = 0; k < c.size(); ++k) {
      try {
        m.fixture_center.push_back(QuadraticNumber::parse(text_of(c[k], "fixture_center")));
      } catch (const ParseError& e) {
        throw ParseError("fixture_center[" + std::to_string(k) + "]: " + e.what());
      }
    }
  }
  for (std::size_t i = 0; i < m.components.size(); ++i)
    if (static_cast<int>(m.components[i].coords.size()) != m.ambient.coords())
      throw ParseError("components[" + std::to_string(i) + "] ('" + m.components[i].label + "'): expected " +
                       std::to_string(m.ambient.coords()) + " coordinate arrays");
  if (check) {
    auto rep = validate(m);
    if (!rep.valid) {
      std::string msg = "invalid curve:";
      for (const auto& p : rep.problems) msg += " " + p + ";";
      throw ParseError(msg);
    }
  }
  return m;
}

CurveModel load_curve(const std::string& path, bool check) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read curve file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_curve(ss.str(), check);
}

nlohmann::json curve_json(const CurveModel& curve) {
  json j;
  if (curve.ambient.kind == AmbientKind::P3)
    j["ambient"] = "P3";
  else
    j["ambient"] = {{"Q3", {{"c", rational_str(curve.ambient.c)}}}};
  j["components"] = json::array();
  for (const auto& c : curve.components) {
    json coords = json::array();
    for (const auto& f : c.coords) {
      json row = json::array();
      for (const auto& v : f.coeffs()) row.push_back(v.str());
      coords.push_back(row);
    }
    j["components"].push_back({{"label", c.label}, {"degree", c.degree()}, {"coords", coords}});
  }
  if (curve.family) {
    json p = json::object();
    for (const auto& [k, v] : curve.family->parameters) p[k] = v;
    j["family"] = {{"name", curve.family->name}, {"parameters", p}};
  }
  if (!curve.fixture_center.empty()) {
    json c = json::array();
    for (const auto& q : curve.fixture_center) c.push_back(q.str());
    j["fixture_center"] = c;
  }
  return j;
}

}  // namespace shadecalc
