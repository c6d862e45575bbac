#include "shadecalc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shadecalc/errors.hpp"

namespace shadecalc {

namespace {

BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Scalar> c(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return BinaryForm(a.degree() + b.degree(), std::move(c));
}

BinaryForm form_axpy(const Scalar& alpha, const BinaryForm& x, const BinaryForm& y) {
  std::vector<Scalar> c = y.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += alpha * x.coeffs()[k];
  return BinaryForm(y.degree(), std::move(c));
}

}  // namespace

CurveComponent::CurveComponent(std::string label_, std::vector<BinaryForm> coords_)
    : label(std::move(label_)), coords(std::move(coords_)) {}

bool CurveComponent::is_real() const {
  return std::all_of(coords.begin(), coords.end(), [](const BinaryForm& f) { return f.is_real(); });
}

CurveComponent CurveComponent::conj() const {
  std::vector<BinaryForm> c;
  for (const auto& f : coords) c.push_back(f.conj());
  return CurveComponent(label + "*", std::move(c));
}

CurveComponent CurveComponent::reversed() const {
  std::vector<BinaryForm> c;
  for (const auto& f : coords) {
    std::vector<Scalar> v = f.coeffs();
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    c.emplace_back(f.degree(), std::move(v));
  }
  return CurveComponent(label, std::move(c));
}

CurveComponent CurveComponent::projected() const {
  if (coords.size() != 5) return *this;
  return CurveComponent(label, std::vector<BinaryForm>(coords.begin() + 1, coords.end()));
}

bool CurveModel::all_real() const {
  return std::all_of(components.begin(), components.end(), [](const CurveComponent& c) { return c.is_real(); });
}

bool CurveModel::none_real() const {
  return std::none_of(components.begin(), components.end(), [](const CurveComponent& c) { return c.is_real(); });
}

ValidationReport validate(const CurveModel& curve) {
  ValidationReport rep;
  if (curve.components.empty()) rep.problems.push_back("curve has no components");
  if (curve.ambient.kind == AmbientKind::Q3 && sgn(curve.ambient.c) <= 0)
    rep.problems.push_back("quadric scale c must be positive");
  for (const auto& comp : curve.components) {
    ComponentCheck chk;
    chk.label = comp.label;
    chk.degree = comp.degree();
    chk.real = comp.is_real();
    const int want = curve.ambient.coords();
    if (static_cast<int>(comp.coords.size()) != want) {
      rep.problems.push_back("component '" + comp.label + "' needs " + std::to_string(want) + " coordinates");
      rep.components.push_back(chk);
      continue;
    }
    chk.equal_degrees = std::all_of(comp.coords.begin(), comp.coords.end(),
                                    [&](const BinaryForm& f) { return f.degree() == chk.degree; });
    if (!chk.equal_degrees) rep.problems.push_back("component '" + comp.label + "' has coordinates of unequal degree");
    if (chk.degree < 1) rep.problems.push_back("component '" + comp.label + "' must have degree >= 1");
    if (chk.equal_degrees) {
      chk.base_point_free = common_root_degree(comp.coords) == 0;
      if (!chk.base_point_free)
        rep.problems.push_back("component '" + comp.label + "' has a base point (coordinate gcd is nonconstant)");
    }
    if (chk.equal_degrees && curve.ambient.kind == AmbientKind::Q3) {
      BinaryForm q = BinaryForm::zero(2 * chk.degree);
      q = form_axpy(Scalar(-curve.ambient.c), form_mul(comp.coords[0], comp.coords[0]), q);
      for (int k = 1; k < 5; ++k) q = form_axpy(Scalar(1), form_mul(comp.coords[k], comp.coords[k]), q);
      chk.on_quadric = q.is_zero();
      if (!chk.on_quadric) rep.problems.push_back("component '" + comp.label + "' does not lie on the quadric");
    }
    rep.components.push_back(chk);
  }
  rep.valid = rep.problems.empty();
  return rep;
}

void require_valid(const CurveModel& curve) {
  auto rep = validate(curve);
  if (rep.valid) return;
  std::string msg = "invalid curve:";
  for (const auto& p : rep.problems) msg += " " + p + ";";
  throw PreconditionViolation(msg);
}

std::vector<Scalar> eval_exact(const CurveComponent& c, const Scalar& s, const Scalar& t) {
  std::vector<Scalar> out;
  out.reserve(c.coords.size());
  for (const auto& f : c.coords) out.push_back(f.eval(s, t));
  return out;
}

ProjPoint eval_point(const CurveComponent& c, const Param& z) {
  ProjPoint p;
  for (const auto& f : c.coords) p.x.push_back(f.eval(z.s, z.t));
  return p.normalized();
}

CVec homogeneous_tangent(const CurveComponent& c, const Param& z) {
  CVec out;
  const Complex a = std::conj(z.s), b = std::conj(z.t);
  for (const auto& f : c.coords) out.push_back(a * f.dt().eval(z.s, z.t) - b * f.ds().eval(z.s, z.t));
  return out;
}

CVec tangent_vector(const CurveComponent& c, const Param& z, int chart) {
  CVec x;
  for (const auto& f : c.coords) x.push_back(f.eval(z.s, z.t));
  CVec dx = homogeneous_tangent(c, z);
  if (chart < 0) {
    chart = 0;
    for (int k = 1; k < static_cast<int>(x.size()); ++k)
      if (std::abs(x[k]) > std::abs(x[chart])) chart = k;
  }
  if (std::abs(x[chart]) == 0) throw DomainError("point lies at infinity of the requested chart");
  CVec out;
  double xs = 0, ts = 0;
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    xs = std::max(xs, std::abs(x[k]));
    ts = std::max(ts, std::abs(dx[k]));
    if (k == chart) continue;
    out.push_back((dx[k] * x[chart] - x[k] * dx[chart]) / (x[chart] * x[chart]));
  }
  double mag = 0;
  for (const auto& v : out) mag = std::max(mag, std::abs(v));
  double scale = std::abs(x[chart]);
  if (mag * scale * scale <= 1e-12 * std::max(xs * ts, 1e-300))
    throw GenericityFailure("non-immersive", "curve derivative vanishes at the parameter");
  return out;
}

std::vector<Poly> chart_polys(const CurveComponent& c, const Rotation& r) {
  std::vector<Poly> out;
  out.reserve(c.coords.size());
  for (const auto& f : c.coords) out.push_back(f.rotated_chart(r.a, r.b));
  return out;
}

std::vector<BivarPoly> rank_one_minors(const std::vector<Poly>& x, const std::vector<Poly>& y) {
  std::vector<BivarPoly> out;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      out.push_back(BivarPoly::product(x[a], y[b]) - BivarPoly::product(x[b], y[a]));
  return out;
}

namespace {

BivarPoly gcd_all(const std::vector<BivarPoly>& fs) {
  BivarPoly g;
  for (const auto& f : fs) {
    g = gcd(g, f);
    if (is_constant(g)) break;
  }
  return g;
}

// Rank-one system of [X(z) | Y(w)] with the common factor removed.
std::vector<Equation> rank_one_system(const CurveComponent& cz, const CurveComponent& cw, const Rotation& r) {
  auto minors = rank_one_minors(chart_polys(cz, r), chart_polys(cw, r));
  BivarPoly g = gcd_all(minors);
  std::vector<Equation> eqs;
  for (const auto& m : minors) {
    if (m.is_zero()) continue;
    auto sat = saturate_fully(m, g);
    eqs.push_back({sat.f, cz.degree() - sat.removed_z, cw.degree() - sat.removed_w});
  }
  return eqs;
}

SelfKind classify_pair(const ParamSolution& s) {
  if (s.z_real && s.w_real) return SelfKind::real_real;
  if (param_distance(s.w, s.z.conj()) < 1e-8) return SelfKind::complex_conjugate;
  return SelfKind::complex;
}

}  // namespace

std::vector<SelfIntersection> self_double_points(const CurveModel& curve, std::uint64_t seed) {
  require_valid(curve);
  std::mt19937_64 rng(seed);
  std::vector<SelfIntersection> out;
  const auto& comps = curve.components;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i; j < comps.size(); ++j) {
      auto sols = solve_on_parameter_lines(
          [&](const Rotation& r) { return rank_one_system(comps[i], comps[j], r); }, rng);
      for (const auto& s : sols) {
        SelfIntersection si{classify_pair(s), s.z, s.w, static_cast<int>(i), static_cast<int>(j),
                            eval_point(comps[i], s.z)};
        // Both reals only make sense for real components.
        if (si.kind == SelfKind::real_real && !(comps[i].is_real() && comps[j].is_real())) si.kind = SelfKind::complex;
        out.push_back(si);
        if (i != j) {
          SelfIntersection sw = si;
          std::swap(sw.z, sw.w);
          std::swap(sw.component_z, sw.component_w);
          out.push_back(sw);
        }
      }
    }
  return out;
}

std::vector<std::vector<RVec>> real_locus_sample(const CurveModel& curve, int n) {
  if (n < 1) throw DomainError("sample count must be positive");
  std::vector<std::vector<RVec>> out;
  for (const auto& comp : curve.components) {
    if (!comp.is_real()) throw PreconditionViolation("component '" + comp.label + "' has no real locus");
    std::vector<RVec> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
      double half = std::numbers::pi * k / n;
      Param p{Complex(std::cos(half), 0), Complex(std::sin(half), 0)};
      RVec v;
      for (const auto& f : comp.coords) v.push_back(f.eval(p.s, p.t).real());
      pts.push_back(std::move(v));
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<Param> find_real_points(const CurveComponent& c, std::uint64_t seed) {
  if (c.is_real()) throw PreconditionViolation("component '" + c.label + "' is real; use its real locus instead");
  CurveComponent cc = c.conj();
  std::mt19937_64 rng(seed);
  auto build = [&](const Rotation& r) {
    auto minors = rank_one_minors(chart_polys(c, r), chart_polys(cc, r));
    BivarPoly g = gcd_all(minors);
    if (!is_constant(g) && !g.is_zero())
      throw PreconditionViolation("component '" + c.label + "' shares a curve with its conjugate");
    std::vector<Equation> eqs;
    for (const auto& m : minors)
      if (!m.is_zero()) eqs.push_back({m, c.degree(), c.degree()});
    return eqs;
  };
  std::vector<Param> out;
  for (const auto& s : solve_on_parameter_lines(build, rng))
    if (param_distance(s.w, s.z.conj()) < 1e-8) out.push_back(s.z);
  return out;
}

}  // namespace shadecalc
