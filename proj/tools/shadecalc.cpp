#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "shadecalc/curve_io.hpp"
#include "shadecalc/errors.hpp"
#include "shadecalc/report.hpp"

using namespace shadecalc;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, genericity = 2, precondition = 3, instability = 4 };

struct Common {
  std::string curve;
  std::uint64_t seed = 1;
  bool json_out = false;
  bool text_out = false;

  ReportFormat format() const { return text_out ? ReportFormat::text : ReportFormat::json; }
};

std::vector<Rational> parse_grid(const std::string& spec) {
  auto a = spec.find(':');
  auto b = a == std::string::npos ? a : spec.find(':', a + 1);
  if (b == std::string::npos || spec.find(':', b + 1) != std::string::npos)
    throw ParseError("--grid expects a:b:step, got '" + spec + "'");
  try {
    return make_grid(parse_rational(spec.substr(0, a)), parse_rational(spec.substr(a + 1, b - a - 1)),
                     parse_rational(spec.substr(b + 1)));
  } catch (const DomainError& e) {
    throw ParseError(std::string("--grid: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << body;
}

// Runs body, mapping library errors onto the exit-code contract. The
// envelope is printed unless quiet_success is set and body succeeded.
int run(ReportEnvelope& env, ReportFormat fmt, const std::function<void()>& body, bool quiet_success = false) {
  int code = ok;
  auto fail = [&](const char* type, const std::string& msg, int c) {
    env.result = nullptr;
    env.error_type = type;
    env.error_message = msg;
    code = c;
  };
  try {
    body();
  } catch (const ParseError& e) {
    fail("parse", e.what(), usage);
  } catch (const DomainError& e) {
    fail("domain", e.what(), usage);
  } catch (const GenericityExhausted& e) {
    fail("genericity_exhausted", e.what(), genericity);
    for (const auto& r : e.reasons()) env.diagnostics.push_back(r);
  } catch (const PreconditionViolation& e) {
    fail("precondition", e.what(), precondition);
  } catch (const InstabilityError& e) {
    fail("instability", e.what(), instability);
  } catch (const GenericityFailure& e) {
    fail("genericity", e.flag() + ": " + e.what(), genericity);
  }
  if (code != ok || !quiet_success) std::cout << emit_report(env, fmt);
  if (code != ok) std::cerr << "shadecalc: " << env.error_message << "\n";
  return code;
}

void add_common(CLI::App* sub, Common& c, bool need_curve) {
  if (need_curve) sub->add_option("--curve", c.curve, "Curve file (JSON)")->required();
  sub->add_option("--seed", c.seed, "Seed for center selection")->capture_default_str();
  auto* j = sub->add_flag("--json", c.json_out, "JSON output (default)");
  auto* t = sub->add_flag("--text", c.text_out, "Aligned text output");
  j->excludes(t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encomplexed writhe and shade numbers of real rational curves"};
  app.require_subcommand(1);

  Common inv_c;
  int centers = 1;
  std::optional<double> tol;
  std::string svg_out;
  bool fixture = false;
  auto* inv = app.add_subcommand("invariants", "Cw, wr/sh parts, shade and linking numbers");
  add_common(inv, inv_c, true);
  inv->add_option("--centers", centers, "Number of distinct centers that must agree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  inv->add_option("--tol", tol, "Smallest accepted sign-recipe margin")->check(CLI::PositiveNumber);
  inv->add_option("--svg", svg_out, "Also write the diagram of the reported center");
  inv->add_flag("--fixture-center", fixture, "Try the curve file's fixture_center first");

  Common sw_c;
  std::string family, grid = "-1:1:1/4";
  int epsilon = 0, degree = 0;
  std::string big_k;
  auto* sw = app.add_subcommand("sweep", "Invariant along a one-parameter family");
  add_common(sw, sw_c, false);
  sw->add_option("--family", family, "kae or range")->required()->check(CLI::IsMember({"kae", "range"}));
  sw->add_option("--epsilon", epsilon, "kae: +1 or -1");
  sw->add_option("--d", degree, "range: degree d >= 1");
  sw->add_option("--K", big_k, "range: scale K (default 10^(d+1))");
  sw->add_option("--grid", grid, "a:b:step")->capture_default_str();

  Common rd_c;
  std::string out_path;
  auto* rd = app.add_subcommand("render", "SVG diagram of the first accepted center");
  add_common(rd, rd_c, true);
  rd->add_option("--out", out_path, "Output file (default stdout)");
  bool rd_fixture = false;
  rd->add_flag("--fixture-center", rd_fixture, "Try the curve file's fixture_center first");

  Common va_c;
  auto* va = app.add_subcommand("validate", "Structural checks of a curve file");
  add_common(va, va_c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  ReportEnvelope env;
  if (inv->parsed()) {
    env.command = "invariants";
    env.invocation = {{"curve", inv_c.curve}, {"seed", inv_c.seed}, {"centers", centers}, {"fixture_center", fixture}};
    if (tol) env.invocation["tol"] = *tol;
    if (!svg_out.empty()) env.invocation["svg"] = svg_out;
    return run(env, inv_c.format(), [&] {
      CurveModel m = load_curve(inv_c.curve);
      InvariantOptions o;
      o.seed = inv_c.seed;
      o.centers = centers;
      o.use_fixture = fixture;
      if (tol) o.tol.frame_margin = *tol;
      auto rep = compute_invariants(m, o);
      env.result = invariant_json(m, rep);
      if (!svg_out.empty()) write_file(svg_out, render_diagram_svg(m, rep.diagrams.front()));
    });
  }
  if (sw->parsed()) {
    env.command = "sweep";
    env.invocation = {{"family", family}, {"grid", grid}, {"seed", sw_c.seed}};
    if (family == "kae") env.invocation["epsilon"] = epsilon;
    if (family == "range") {
      env.invocation["d"] = degree;
      if (!big_k.empty()) env.invocation["K"] = big_k;
    }
    return run(env, sw_c.format(), [&] {
      auto g = parse_grid(grid);
      SweepReport rep;
      if (family == "kae") {
        if (epsilon != 1 && epsilon != -1) throw ParseError("--epsilon must be +1 or -1");
        rep = sweep_kae(epsilon, g, sw_c.seed);
      } else {
        if (degree < 1) throw ParseError("--d must be at least 1");
        Rational k;
        if (big_k.empty()) {
          mpz_class p;
          mpz_ui_pow_ui(p.get_mpz_t(), 10, degree + 1);
          k = Rational(p);
        } else {
          k = parse_rational(big_k);
        }
        if (sgn(k) <= 0) throw ParseError("--K must be positive");
        rep = sweep_range(degree, k, g);
      }
      for (std::size_t i = 0; i < rep.grid.size(); ++i)
        if (!rep.errors[i].empty())
          env.diagnostics.push_back("sample " + rational_str(rep.grid[i]) + ": " + rep.errors[i]);
      env.result = sweep_json(rep);
    });
  }
  if (rd->parsed()) {
    env.command = "render";
    env.invocation = {{"curve", rd_c.curve}, {"seed", rd_c.seed}, {"fixture_center", rd_fixture}};
    std::string svg;
    int code = run(
        env, rd_c.format(),
        [&] {
          CurveModel m = load_curve(rd_c.curve);
          CenterOptions co;
          co.use_fixture = rd_fixture;
          svg = render_diagram_svg(m, select_center(m, rd_c.seed, co));
          if (!out_path.empty()) {
            write_file(out_path, svg);
            env.result = {{"svg", out_path}};
          }
        },
        out_path.empty());
    if (code == ok && out_path.empty()) std::cout << svg;
    return code;
  }
  env.command = "validate";
  env.invocation = {{"curve", va_c.curve}};
  return run(env, va_c.format(), [&] { env.result = validation_json(validate(load_curve(va_c.curve, false))); });
}
