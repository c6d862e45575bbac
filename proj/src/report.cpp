#include "shadecalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace shadecalc {

using nlohmann::json;

namespace {

// 12 significant digits keeps floating diagnostics byte-stable.
json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? json(0.0) : json(r);
}

json rat(Rational q) {
  q.canonicalize();
  return rational_str(q);
}

json complex_json(Complex z) { return json::array({num(z.real()), num(z.imag())}); }

json param_json(const Param& p) {
  Complex scale = std::abs(p.s) >= std::abs(p.t) ? p.s : p.t;
  return {{"s", complex_json(p.s / scale)}, {"t", complex_json(p.t / scale)}};
}

const char* kind_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::real_real:
      return "real_real";
    case CrossingKind::solitary:
      return "solitary";
    case CrossingKind::shade:
      return "shade";
  }
  return "?";
}

json tolerances_json(const Tolerances& t) {
  return {{"pair", num(t.pair)}, {"frame_margin", num(t.frame_margin)}, {"separation", num(t.separation)}};
}

std::string ambient_tag(const CurveModel& curve) {
  return curve.ambient.kind == AmbientKind::Q3 ? "Q3(c=" + rational_str(curve.ambient.c) + ")" : "P3";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    if (j.empty()) out.emplace_back(prefix, "{}");
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(*it, prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (scalars) {
      std::string v = "[";
      for (std::size_t k = 0; k < j.size(); ++k)
        v += (k ? ", " : "") + (j[k].is_string() ? j[k].get<std::string>() : j[k].dump());
      out.emplace_back(prefix, v + "]");
    } else {
      for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
    }
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

json diagram_json(const CurveModel& curve, const Diagram& d) {
  json c;
  json coords = json::array();
  for (const auto& q : d.center.c) coords.push_back(rat(q));
  c["point"] = coords;
  if (curve.ambient.kind == AmbientKind::Q3) c["pole_sign"] = d.center.pole_sign;
  c["attempt"] = d.center.attempt;
  c["fixture"] = d.center.fixture;

  const auto& g = d.certificate;
  json cert = {{"center_off_curve", g.center_off_curve},
               {"all_chords_simple", g.all_chords_simple},
               {"no_triple_points", g.no_triple_points},
               {"no_tangent_chords", g.no_tangent_chords},
               {"no_crossing_at_chart_seam", g.no_crossing_at_chart_seam},
               {"min_jacobian_sine", num(g.min_jacobian_sine)},
               {"min_frame_margin", num(g.min_frame_margin)}};

  json xs = json::array();
  for (const auto& x : d.crossings) {
    xs.push_back({{"kind", kind_name(x.kind)},
                  {"components",
                   json::array({curve.components[x.component_z].label, curve.components[x.component_w].label})},
                  {"same_component", x.same_component},
                  {"writhe", x.writhe},
                  {"z", param_json(x.z)},
                  {"w", param_json(x.w)},
                  {"image", json::array({num(x.image[0]), num(x.image[1]), num(x.image[2])})},
                  {"residual", num(x.residual)}});
  }
  return {{"center", c},
          {"certificate", cert},
          {"crossings", xs},
          {"complex_pairs", d.complex_pairs},
          {"rejected_centers", d.rejected}};
}

json invariant_json(const CurveModel& curve, const InvariantReport& rep) {
  json j;
  j["ambient"] = ambient_tag(curve);
  j["seed"] = rep.seed;
  j["tolerances"] = tolerances_json(rep.tol);
  j["real_point_free"] = rep.real_point_free;
  if (rep.real_point_free) {
    j["Cw"] = nullptr;
    j["sh"] = rat(rep.sh_part);
  } else {
    Rational cw = rep.cw;
    cw.canonicalize();
    if (cw.get_den() == 1 && cw.get_num().fits_slong_p())
      j["Cw"] = cw.get_num().get_si();
    else
      j["Cw"] = rat(cw);
  }
  j["wr_part"] = rat(rep.wr_part);
  j["sh_part"] = rat(rep.sh_part);
  json lk = json::object();
  for (const auto& [k, v] : rep.linking)
    lk[curve.components[k.first].label + "," + curve.components[k.second].label] = rat(v);
  j["linking"] = lk;
  if (!rep.diagrams.empty()) {
    json d = diagram_json(curve, rep.diagrams.front());
    for (auto it = d.begin(); it != d.end(); ++it) j[it.key()] = *it;
  }
  json checked = json::array();
  for (const auto& d : rep.diagrams) {
    int wr = 0, sh2 = 0;
    for (const auto& x : d.crossings) {
      if (x.kind == CrossingKind::real_real && x.same_component) wr += x.writhe;
      if (x.kind == CrossingKind::solitary) sh2 += 2 * x.writhe;
      if (x.kind == CrossingKind::shade) sh2 += x.writhe;
    }
    json pt = json::array();
    for (const auto& q : d.center.c) pt.push_back(rat(q));
    checked.push_back({{"point", pt},
                       {"crossings", d.crossings.size()},
                       {"wr_part", rat(Rational(wr))},
                       {"sh_part", rat(Rational(sh2, 2))}});
  }
  j["centers_checked"] = checked;
  return j;
}

json sweep_json(const SweepReport& rep) {
  json samples = json::array();
  for (std::size_t k = 0; k < rep.grid.size(); ++k) {
    json s = {{"parameter", rat(rep.grid[k])}, {"singular", static_cast<bool>(rep.singular[k])}};
    s["value"] = rep.values[k] ? rat(*rep.values[k]) : json(nullptr);
    if (!rep.errors[k].empty()) s["error"] = rep.errors[k];
    samples.push_back(std::move(s));
  }
  json jumps = json::array();
  for (const auto& jp : rep.jumps) {
    json e = {{"interval", json::array({rat(jp.lo), rat(jp.hi)})}, {"delta", rat(jp.delta)}};
    if (rep.family == "range") e["brackets_real_point"] = jp.brackets_real_point;
    jumps.push_back(std::move(e));
  }
  json params = json::object();
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  return {{"family", rep.family}, {"parameters", params}, {"samples", samples}, {"jumps", jumps}};
}

json validation_json(const ValidationReport& rep) {
  json comps = json::array();
  for (const auto& c : rep.components) {
    comps.push_back({{"label", c.label},
                     {"degree", c.degree},
                     {"real", c.real},
                     {"base_point_free", c.base_point_free},
                     {"equal_degrees", c.equal_degrees},
                     {"on_quadric", c.on_quadric}});
  }
  return {{"valid", rep.valid}, {"components", comps}, {"problems", rep.problems}};
}

std::string emit_report(const ReportEnvelope& env, ReportFormat format) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = env.command;
  j["invocation"] = env.invocation;
  j["result"] = env.result;
  j["diagnostics"] = env.diagnostics;
  if (!env.error_type.empty()) j["error"] = {{"type", env.error_type}, {"message", env.error_message}};
  else j["error"] = nullptr;
  if (format == ReportFormat::json) return j.dump(2) + "\n";

  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream o;
  for (const auto& [k, v] : rows) o << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return o.str();
}

}  // namespace shadecalc
