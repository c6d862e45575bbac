#include "shadecalc/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "shadecalc/errors.hpp"

namespace shadecalc {

namespace {

// Below this the floating-point sign itself is not trusted.
constexpr double kSignFloor = 1e-12;

double vnorm(const RVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double vnorm(const CVec& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

RVec real_param_point(const CurveComponent& c, const Param& p) {
  RVec v;
  for (const auto& f : c.coords) v.push_back(f.eval(Complex(p.s.real(), 0), Complex(p.t.real(), 0)).real());
  return v;
}

RVec real_param_tangent(const CurveComponent& c, const Param& p) {
  Param r{Complex(p.s.real(), 0), Complex(p.t.real(), 0)};
  RVec v;
  for (const auto& x : homogeneous_tangent(c, r)) v.push_back(x.real());
  return v;
}

// Projection of a point of P3 from c into the hyperplane x_h = 0, as a unit
// vector of the remaining three coordinates with its largest entry positive.
std::array<double, 3> project_from(const CVec& a, const CVec& c) {
  int h = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(c[k]) > std::abs(c[h])) h = k;
  Complex r = a[h] / c[h];
  CVec s;
  for (int k = 0; k < 4; ++k)
    if (k != h) s.push_back(a[k] - r * c[k]);
  int big = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(s[k]) > std::abs(s[big])) big = k;
  Complex phase = std::abs(s[big]) > 0 ? std::conj(s[big]) / std::abs(s[big]) : Complex(1, 0);
  std::array<double, 3> out{};
  double n = 0;
  for (int k = 0; k < 3; ++k) {
    out[k] = (s[k] * phase).real();
    n += out[k] * out[k];
  }
  n = std::sqrt(n);
  if (n == 0) throw DomainError("point coincides with the projection center");
  for (auto& v : out) v /= n;
  return out;
}

CVec to_cvec(const RVec& v) { return CVec(v.begin(), v.end()); }

bool rank_one(const CVec& a, const CVec& b) {
  double scale = vnorm(a) * vnorm(b);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::abs(a[i] * b[j] - a[j] * b[i]) > 1e-8 * scale) return false;
  return true;
}

CVec eval_c(const CurveComponent& c, const Param& p) {
  CVec v;
  for (const auto& f : c.coords) v.push_back(f.eval(p.s, p.t));
  return v;
}

BivarPoly gcd_all(const std::vector<BivarPoly>& fs) {
  BivarPoly g;
  for (const auto& f : fs) {
    g = gcd(g, f);
    if (is_constant(g)) break;
  }
  return g;
}

std::vector<Rational> draw_center(std::mt19937_64& rng) {
  for (;;) {
    std::vector<Rational> p;
    bool nonzero = false;
    for (int k = 0; k < 4; ++k) {
      long num = draw_int(rng, -9, 9);
      long den = draw_int(rng, 1, 5);
      p.emplace_back(num, den);
      p.back().canonicalize();
      nonzero = nonzero || num != 0;
    }
    if (nonzero) return p;
  }
}

// Rational P3 point proportional to exact quadratic coordinates: the nonzero
// entries must all be rational or all rational multiples of one sqrt(n).
std::vector<Rational> rational_direction(const std::vector<QuadraticNumber>& q) {
  long kind = 0;
  std::vector<Rational> out;
  for (const auto& v : q) {
    long k = 1;
    Rational r = v.is_rational() ? Rational(v.a + (v.radicand == 1 ? v.b : Rational(0))) : v.b;
    if (!v.is_rational()) {
      if (sgn(v.a) != 0) throw PreconditionViolation("fixture center is not a rational point");
      k = v.radicand;
    }
    if (sgn(r) != 0) {
      if (kind != 0 && kind != k) throw PreconditionViolation("fixture center is not a rational point");
      kind = k;
    }
    out.push_back(r);
  }
  return out;
}

ProjectionCenter fixture_center(const CurveModel& curve) {
  const auto& q = curve.fixture_center;
  ProjectionCenter pc;
  pc.fixture = true;
  if (curve.ambient.kind == AmbientKind::P3) {
    if (q.size() != 4) throw PreconditionViolation("P3 fixture center needs 4 coordinates");
    pc.c = rational_direction(q);
    return pc;
  }
  if (q.size() != 5) throw PreconditionViolation("Q3 fixture center needs 5 coordinates");
  std::vector<QuadraticNumber> tail(q.begin() + 1, q.end());
  pc.c = rational_direction(tail);
  double x0 = q[0].to_double(), dot = 0;
  for (int k = 0; k < 4; ++k) dot += tail[k].to_double() / x0 * pc.c[k].get_d();
  pc.pole_sign = dot > 0 ? 1 : -1;
  return pc;
}

}  // namespace

CVec ProjectionCenter::point() const {
  CVec v;
  for (const auto& x : c) v.emplace_back(x.get_d(), 0);
  return v;
}

RVec ProjectionCenter::pole(const Rational& quadric_scale) const {
  RVec v;
  double n = 0;
  for (const auto& x : c) {
    v.push_back(x.get_d());
    n += v.back() * v.back();
  }
  double f = pole_sign * std::sqrt(quadric_scale.get_d()) / std::sqrt(n);
  for (auto& x : v) x *= f;
  return v;
}

std::vector<CurveComponent> p3_components(const CurveModel& curve) {
  std::vector<CurveComponent> out;
  for (const auto& c : curve.components)
    out.push_back(curve.ambient.kind == AmbientKind::Q3 ? c.projected() : c);
  return out;
}

std::vector<BivarPoly> collinearity_system(const std::vector<Rational>& p, const std::vector<Poly>& x,
                                           const std::vector<Poly>& y) {
  auto m2 = [&](int a, int b) { return BivarPoly::product(x[a], y[b]) - BivarPoly::product(x[b], y[a]); };
  std::vector<BivarPoly> out;
  for (int skip = 0; skip < 4; ++skip) {
    int r[3], n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != skip) r[n++] = k;
    out.push_back(m2(r[1], r[2]) * Scalar(p[r[0]]) - m2(r[0], r[2]) * Scalar(p[r[1]]) +
                  m2(r[0], r[1]) * Scalar(p[r[2]]));
  }
  return out;
}

bool center_on_curve(const CurveModel& curve, const std::vector<Rational>& p) {
  for (const auto& comp : p3_components(curve)) {
    std::vector<BinaryForm> minors;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        std::vector<Scalar> c(comp.degree() + 1);
        for (int k = 0; k <= comp.degree(); ++k)
          c[k] = Scalar(p[a]) * comp.coords[b].coeffs()[k] - Scalar(p[b]) * comp.coords[a].coeffs()[k];
        minors.emplace_back(comp.degree(), std::move(c));
      }
    if (common_root_degree(minors) != 0) return true;
  }
  return false;
}

std::vector<ChordSolution> chord_pairs(const CurveModel& curve, const ProjectionCenter& center,
                                       std::mt19937_64& rng) {
  const auto comps = p3_components(curve);
  const bool real = curve.all_real();
  std::vector<ChordSolution> out;
  auto run = [&](const CurveComponent& cz, const CurveComponent& cw, int iz, int iw) {
    auto build = [&](const Rotation& r) {
      auto xz = chart_polys(cz, r), yw = chart_polys(cw, r);
      BivarPoly g = gcd_all(rank_one_minors(xz, yw));
      std::vector<Equation> eqs;
      for (const auto& m : collinearity_system(center.c, xz, yw)) {
        if (m.is_zero()) continue;
        auto sat = saturate_fully(m, g);
        eqs.push_back({sat.f, cz.degree() - sat.removed_z, cw.degree() - sat.removed_w});
      }
      return eqs;
    };
    for (const auto& s : solve_on_parameter_lines(build, rng)) out.push_back({s, iz, iw});
  };
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!real) {
      run(comps[i], comps[i].conj(), static_cast<int>(i), static_cast<int>(i));
      continue;
    }
    for (std::size_t j = i; j < comps.size(); ++j) run(comps[i], comps[j], static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

int real_crossing_writhe(const RVec& a, const RVec& da, const RVec& b, const RVec& db, double* margin) {
  double d = det_columns(std::vector<RVec>{a, da, b, db});
  double m = std::abs(d) / (vnorm(a) * vnorm(da) * vnorm(b) * vnorm(db));
  if (margin) *margin = m;
  if (!(m >= kSignFloor)) throw GenericityFailure("degenerate-frame", "real crossing frame is degenerate");
  return d > 0 ? 1 : -1;
}

int frame_writhe(const RVec& v, const RVec& u, const RVec& w) { return orientation_sign({v, u, w}, kSignFloor); }

int sphere_real_pair_sign(const Stereographic& st, const RVec& x, const RVec& dx, const RVec& y, const RVec& dy,
                          double* margin) {
  auto sx = st.map(x), sy = st.map(y);
  auto px = st.push(x, dx), py = st.push(y, dy);
  double dot = sx[0] * sy[0] + sx[1] * sy[1] + sx[2] * sy[2];
  double eps = dot < 0 ? -1 : 1;
  RVec u{sy[0] - sx[0], sy[1] - sx[1], sy[2] - sx[2]};
  RVec ex{px[0], px[1], px[2]}, ey{eps * py[0], eps * py[1], eps * py[2]};
  double d1 = det_columns(std::vector<RVec>{u, ey, ex});
  RVec mu{-u[0], -u[1], -u[2]};
  RVec ex2{eps * px[0], eps * px[1], eps * px[2]}, ey2{py[0], py[1], py[2]};
  double d2 = det_columns(std::vector<RVec>{mu, ex2, ey2});
  double scale = vnorm(u) * vnorm(ex) * vnorm(ey2);
  double m = std::min(std::abs(d1), std::abs(d2)) / scale;
  if (margin) *margin = m;
  if (!(m >= kSignFloor)) throw GenericityFailure("degenerate-frame", "sphere crossing frame is degenerate");
  if ((d1 > 0) != (d2 > 0)) throw GenericityFailure("endpoint-agreement", "sphere sign differs between endpoints");
  return d1 > 0 ? 1 : -1;
}

int solitary_writhe(const CVec& a, const CVec& f, const CVec& c, double* margin) {
  int h = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(c[k]) > std::abs(c[h])) h = k;
  CVec s(4);
  Complex r = a[h] / c[h];
  for (int k = 0; k < 4; ++k) s[k] = a[k] - r * c[k];
  int big = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(s[k]) > std::abs(s[big])) big = k;
  Complex inv = 1.0 / s[big];
  double imag = 0;
  for (auto& v : s) {
    v *= inv;
    imag = std::max(imag, std::abs(v.imag()));
    v = Complex(v.real(), 0);
  }
  if (imag > 1e-6) throw GenericityFailure("all-chords-simple", "solitary chord line is not real");
  Complex tau = LineParam(c, s).tau(a);
  CVec fc(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) fc[k] = std::conj(f[k]);
  Complex d = det_columns(std::vector<CVec>{s, c, f, fc});
  double m = std::abs(d.imag()) / (vnorm(s) * vnorm(c) * vnorm(f) * vnorm(f));
  double mt = std::abs(tau.imag()) / (1 + std::abs(tau));
  if (margin) *margin = std::min(m, mt);
  if (!(m >= kSignFloor) || !(mt >= kSignFloor))
    throw GenericityFailure("degenerate-frame", "solitary branch is tangent to the real plane");
  int st = tau.imag() > 0 ? 1 : -1;
  int sd = d.imag() > 0 ? 1 : -1;
  return -st * sd;
}

Diagram analyze_center(const CurveModel& curve, const ProjectionCenter& center, const Tolerances& tol) {
  require_valid(curve);
  if (!curve.all_real() && !curve.none_real())
    throw PreconditionViolation("curves mixing real and non-real components are not supported");
  Diagram dg;
  dg.center = center;
  auto& cert = dg.certificate;
  if (center_on_curve(curve, center.c)) throw GenericityFailure("center-off-curve", "center lies on the curve");
  cert.center_off_curve = true;

  const bool q3 = curve.ambient.kind == AmbientKind::Q3;
  const auto comps = p3_components(curve);
  const CVec c = center.point();
  std::mt19937_64 rng(center.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(center.attempt) + 1);
  auto sols = chord_pairs(curve, center, rng);
  cert.no_crossing_at_chart_seam = true;
  cert.min_jacobian_sine = 1;
  for (const auto& s : sols) cert.min_jacobian_sine = std::min(cert.min_jacobian_sine, s.sol.jacobian_sine);

  for (const auto& s : sols) {
    const auto& cz = comps[s.component_z];
    const CurveComponent cw = curve.all_real() ? comps[s.component_w] : comps[s.component_w].conj();
    if (rank_one(eval_c(cz, s.sol.z), eval_c(cw, s.sol.w)))
      throw PreconditionViolation("curve image in P3 has a double point; the analysis needs a smooth curve");
    if (s.component_z == s.component_w && param_distance(s.sol.z, s.sol.w) < tol.separation)
      throw GenericityFailure("no-tangent-chords", "a tangent line passes through the center");
  }
  cert.no_tangent_chords = true;
  cert.all_chords_simple = true;

  std::optional<Stereographic> st;
  if (q3) st.emplace(center.pole(curve.ambient.c), curve.ambient.c.get_d());

  double margin_min = 1;
  std::vector<bool> used(sols.size(), false);
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const auto& s = sols[i];
    const bool same = s.component_z == s.component_w;
    const bool conj_pair = param_distance(s.sol.w, s.sol.z.conj()) < tol.pair;
    const bool real_pair = s.sol.z_real && s.sol.w_real && curve.all_real();
    if (curve.all_real() && same) {
      bool found = false;
      for (std::size_t j = i + 1; j < sols.size() && !found; ++j) {
        if (used[j] || sols[j].component_z != s.component_z || sols[j].component_w != s.component_w) continue;
        if (param_distance(sols[j].sol.z, s.sol.w) < tol.pair && param_distance(sols[j].sol.w, s.sol.z) < tol.pair) {
          used[j] = true;
          found = true;
        }
      }
      if (!found) throw GenericityFailure("all-chords-simple", "chord solution without its swapped partner");
    }

    Crossing x;
    x.z = s.sol.z;
    x.w = s.sol.w;
    x.component_z = s.component_z;
    x.component_w = s.component_w;
    x.same_component = same;
    x.residual = s.sol.residual;
    double margin = 1;
    if (real_pair) {
      x.kind = CrossingKind::real_real;
      if (q3) {
        const auto& fz = curve.components[s.component_z];
        const auto& fw = curve.components[s.component_w];
        RVec a = real_param_point(fz, s.sol.z), b = real_param_point(fw, s.sol.w);
        RVec ya = sphere_chart(a), yb = sphere_chart(b);
        RVec ta = sphere_chart_tangent(a, real_param_tangent(fz, s.sol.z));
        RVec tb = sphere_chart_tangent(b, real_param_tangent(fw, s.sol.w));
        x.writhe = sphere_real_pair_sign(*st, ya, ta, yb, tb, &margin);
      } else {
        x.writhe = real_crossing_writhe(real_param_point(comps[s.component_z], s.sol.z),
                                        real_param_tangent(comps[s.component_z], s.sol.z),
                                        real_param_point(comps[s.component_w], s.sol.w),
                                        real_param_tangent(comps[s.component_w], s.sol.w), &margin);
      }
      x.image = project_from(to_cvec(real_param_point(comps[s.component_z], s.sol.z)), c);
    } else if (conj_pair && (same || !curve.all_real())) {
      x.kind = curve.all_real() ? CrossingKind::solitary : CrossingKind::shade;
      const auto& comp = comps[s.component_z];
      CVec a = eval_c(comp, s.sol.z);
      x.writhe = solitary_writhe(a, homogeneous_tangent(comp, s.sol.z), c, &margin);
      x.image = project_from(a, c);
    } else {
      if (curve.all_real()) ++dg.complex_pairs;
      continue;
    }
    if (margin < tol.frame_margin) throw GenericityFailure("degenerate-frame", "sign recipe margin below tolerance");
    margin_min = std::min(margin_min, margin);
    dg.crossings.push_back(x);
  }
  // Chord solutions of real curves come in conjugate pairs.
  if (curve.all_real() && dg.complex_pairs % 2 != 0)
    throw GenericityFailure("all-chords-simple", "complex chord solutions are not closed under conjugation");
  dg.complex_pairs /= curve.all_real() ? 2 : 1;

  for (std::size_t i = 0; i < dg.crossings.size(); ++i)
    for (std::size_t j = i + 1; j < dg.crossings.size(); ++j) {
      const auto& u = dg.crossings[i].image;
      const auto& v = dg.crossings[j].image;
      double d = std::hypot(u[0] - v[0], u[1] - v[1], u[2] - v[2]);
      if (d < tol.separation) throw GenericityFailure("no-triple-points", "two crossings share an image point");
    }
  cert.no_triple_points = true;
  cert.min_frame_margin = margin_min;
  return dg;
}

Diagram select_center(const CurveModel& curve, std::uint64_t seed, const CenterOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> reasons;
  const bool q3 = curve.ambient.kind == AmbientKind::Q3;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    ProjectionCenter pc;
    if (attempt == 0 && !opts.forced.empty()) {
      pc.c = opts.forced;
    } else if (attempt == 0 && opts.use_fixture && !curve.fixture_center.empty()) {
      pc = fixture_center(curve);
    } else {
      pc.c = draw_center(rng);
      if (q3) pc.pole_sign = draw_int(rng, 0, 1) ? 1 : -1;
    }
    pc.attempt = attempt;
    pc.seed = seed;
    try {
      Diagram dg = analyze_center(curve, pc, opts.tol);
      dg.rejected = reasons;
      return dg;
    } catch (const GenericityFailure& e) {
      reasons.push_back("attempt " + std::to_string(attempt) + ": " + e.flag() + ": " + e.what());
    } catch (const DomainError& e) {
      reasons.push_back("attempt " + std::to_string(attempt) + ": domain: " + e.what());
    }
  }
  throw GenericityExhausted("no generic center found after " + std::to_string(opts.max_attempts) + " attempts",
                            reasons);
}

std::string render_diagram_svg(const CurveModel& curve, const Diagram& diagram, int samples) {
  const CVec c = diagram.center.point();
  auto to_xy = [](std::array<double, 3> u) {
    if (u[2] < 0)
      for (auto& v : u) v = -v;
    return std::array<double, 2>{400 + 380 * u[0], 400 - 380 * u[1]};
  };
  std::ostringstream svg;
  svg << std::fixed << std::setprecision(2);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n"
      << "<circle cx=\"400\" cy=\"400\" r=\"380\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  if (curve.all_real()) {
    const auto locus = real_locus_sample(curve, samples);
    const bool q3 = curve.ambient.kind == AmbientKind::Q3;
    for (const auto& comp : locus) {
      std::vector<std::vector<std::array<double, 2>>> runs(1);
      std::array<double, 3> prev{};
      for (std::size_t k = 0; k <= comp.size(); ++k) {
        RVec x = comp[k % comp.size()];
        if (q3) x.erase(x.begin());
        auto u = project_from(to_cvec(x), c);
        if (u[2] < 0)
          for (auto& v : u) v = -v;
        if (k > 0 && std::hypot(u[0] - prev[0], u[1] - prev[1], u[2] - prev[2]) > 0.25) runs.emplace_back();
        runs.back().push_back(to_xy(u));
        prev = u;
      }
      for (const auto& run : runs) {
        if (run.size() < 2) continue;
        svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < run.size(); ++k) svg << (k ? " " : "") << run[k][0] << "," << run[k][1];
        svg << "\"/>\n";
      }
    }
  }
  int n_real = 0, n_dot = 0;
  for (const auto& x : diagram.crossings) {
    auto p = to_xy(x.image);
    if (x.kind == CrossingKind::real_real) {
      svg << "<circle id=\"crossing" << n_real++ << "\" cx=\"" << p[0] << "\" cy=\"" << p[1]
          << "\" r=\"7\" fill=\"white\" stroke=\"" << (x.writhe > 0 ? "#b00000" : "#0030b0")
          << "\" stroke-width=\"1.5\"/>\n"
          << "<text x=\"" << p[0] << "\" y=\"" << p[1] + 4 << "\" font-size=\"11\" text-anchor=\"middle\">"
          << (x.writhe > 0 ? "+" : "-") << "</text>\n";
    } else {
      svg << "<circle id=\"" << (x.kind == CrossingKind::solitary ? "solitary" : "shade") << n_dot++ << "\" cx=\"" << p[0]
          << "\" cy=\"" << p[1] << "\" r=\"5\" fill=\"" << (x.writhe > 0 ? "#b00000" : "#0030b0") << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace shadecalc
