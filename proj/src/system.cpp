#include "shadecalc/system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shadecalc/errors.hpp"
#include "shadecalc/roots.hpp"

namespace shadecalc {

Complex Param::ratio() const {
  if (std::abs(s) < 1e-300) return {1e300, 0};
  return t / s;
}

double Param::angle() const {
  double sr = s.real(), tr = t.real();
  if (sr < 0 || (sr == 0 && tr < 0)) {
    sr = -sr;
    tr = -tr;
  }
  return 2 * std::atan2(tr, sr);
}

bool Param::is_real(double tol) const {
  // Real iff s conj(t) is real.
  Complex q = s * std::conj(t);
  return std::abs(q.imag()) <= tol * (std::norm(s) + std::norm(t));
}

double param_distance(const Param& a, const Param& b) {
  double na = std::sqrt(std::norm(a.s) + std::norm(a.t));
  double nb = std::sqrt(std::norm(b.s) + std::norm(b.t));
  return std::abs(a.s * b.t - a.t * b.s) / (na * nb);
}

Param Rotation::apply(Complex z) const {
  double a_d = a.get_d(), b_d = b.get_d();
  return {Complex(a_d, 0) - b_d * z, Complex(b_d, 0) + a_d * z};
}

const std::vector<Rotation>& standard_rotations() {
  static const std::vector<Rotation> rotations{
      {Rational(1), Rational(0)},       {Rational(3, 5), Rational(4, 5)},    {Rational(5, 13), Rational(12, 13)},
      {Rational(8, 17), Rational(15, 17)}, {Rational(20, 29), Rational(21, 29)}, {Rational(-7, 25), Rational(24, 25)},
  };
  return rotations;
}

long draw_int(std::mt19937_64& rng, long lo, long hi) {
  auto span = static_cast<unsigned long long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

SaturatedEquation saturate_fully(const BivarPoly& f, const BivarPoly& g) {
  SaturatedEquation out{f, 0, 0};
  if (f.is_zero() || is_constant(g)) return out;
  BivarPoly res = saturate_factor(f, g).result;
  for (BivarPoly h = gcd(res, g); !is_constant(h); h = gcd(res, g)) res = saturate_factor(res, h).result;
  out.removed_z = f.deg_z() - res.deg_z();
  out.removed_w = f.deg_w() - res.deg_w();
  out.f = std::move(res);
  return out;
}

namespace {

// Common root of univariate polynomials read as binary forms of the given
// formal degrees; a root at infinity shows up as every form being short.
bool common_root(const std::vector<Poly>& polys, const std::vector<int>& formal) {
  Poly g;
  bool any = false, all_short = true;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].is_zero()) continue;
    any = true;
    if (polys[k].degree() >= formal[k]) all_short = false;
    g = gcd(g, polys[k]);
  }
  return !any || all_short || g.degree() > 0;
}

BivarPoly d_dz(const BivarPoly& f) {
  std::vector<Poly> rows;
  for (const auto& r : f.rows()) rows.push_back(r.derivative());
  return BivarPoly(std::move(rows));
}

BivarPoly d_dw(const BivarPoly& f) {
  std::vector<Poly> rows;
  for (int j = 1; j <= f.deg_w(); ++j) rows.push_back(f.row(j) * Scalar(static_cast<long>(j)));
  return BivarPoly(std::move(rows));
}

Poly eliminate(const BivarPoly& a, const BivarPoly& b) {
  if (a.deg_w() == 0) return a.row(0);
  if (b.deg_w() == 0) return b.row(0);
  return resultant(a, b, Var::w);
}

}  // namespace

bool solutions_at_infinity(const std::vector<Equation>& eqs) {
  std::vector<Poly> top_z, top_w;
  std::vector<int> formal_w, formal_z;
  for (const auto& e : eqs) {
    if (e.f.is_zero()) continue;
    top_z.push_back(e.f.deg_z() >= e.nz ? e.f.z_coeff(e.nz) : Poly());
    formal_w.push_back(e.nw);
    top_w.push_back(e.f.deg_w() >= e.nw ? e.f.row(e.nw) : Poly());
    formal_z.push_back(e.nz);
  }
  if (top_z.empty()) return true;
  return common_root(top_z, formal_w) || common_root(top_w, formal_z);
}

std::vector<SystemSolution> solve_chart(const std::vector<Equation>& eqs_in, std::mt19937_64& rng,
                                        const SolveOptions& opts) {
  std::vector<BivarPoly> eqs;
  for (const auto& e : eqs_in) {
    if (e.f.is_zero()) continue;
    if (is_constant(e.f)) return {};
    eqs.push_back(e.f);
  }
  if (eqs.size() < 2) throw GenericityFailure("positive-dimensional", "fewer than two independent equations");

  Poly rz, rw;
  for (int attempt = 0; attempt < 4; ++attempt) {
    BivarPoly a, b;
    for (const auto& f : eqs) {
      long alpha = draw_int(rng, 1, 97) * (draw_int(rng, 0, 1) ? 1 : -1);
      long beta = draw_int(rng, 1, 97) * (draw_int(rng, 0, 1) ? 1 : -1);
      a += f * Scalar(alpha);
      b += f * Scalar(beta);
    }
    if (a.is_zero() || b.is_zero()) continue;
    rz = eliminate(a, b);
    rw = eliminate(a.swapped(), b.swapped());
    if (!rz.is_zero() && !rw.is_zero()) break;
  }
  if (rz.is_zero() || rw.is_zero()) throw GenericityFailure("positive-dimensional", "eliminant vanishes identically");
  if (rz.degree() == 0 || rw.degree() == 0) return {};

  const auto zs = complex_roots(rz);
  const auto ws = complex_roots(rw);
  for (const auto& r : zs)
    if (std::abs(r.center) > opts.max_modulus) throw GenericityFailure("near-infinity", "eliminant root near infinity");
  for (const auto& r : ws)
    if (std::abs(r.center) > opts.max_modulus) throw GenericityFailure("near-infinity", "eliminant root near infinity");

  std::vector<BivarPoly> gz, gw;
  for (const auto& f : eqs) {
    gz.push_back(d_dz(f));
    gw.push_back(d_dw(f));
  }

  std::vector<SystemSolution> out;
  std::vector<int> used_w(ws.size(), 0);
  for (const auto& zr : zs) {
    int hits = 0;
    for (std::size_t j = 0; j < ws.size(); ++j) {
      const auto& wr = ws[j];
      double res = 0;
      for (const auto& f : eqs) {
        double mag = f.magnitude(zr.center, wr.center);
        double v = std::abs(f.eval(zr.center, wr.center));
        res = std::max(res, mag > 0 ? v / mag : v);
        if (res > opts.reject_residual) break;
      }
      if (res > opts.reject_residual) continue;
      if (res > opts.accept_residual)
        throw GenericityFailure("ambiguous-pairing", "candidate pair residual between accept and reject thresholds");
      if (zr.multiplicity > 1 || wr.multiplicity > 1)
        throw GenericityFailure("all-chords-simple", "solution coordinate is a multiple eliminant root");
      ++hits;
      ++used_w[j];
      double best = 0;
      for (std::size_t k = 0; k < eqs.size(); ++k)
        for (std::size_t l = k + 1; l < eqs.size(); ++l) {
          Complex a1 = gz[k].eval(zr.center, wr.center), b1 = gw[k].eval(zr.center, wr.center);
          Complex a2 = gz[l].eval(zr.center, wr.center), b2 = gw[l].eval(zr.center, wr.center);
          double n1 = std::sqrt(std::norm(a1) + std::norm(b1)), n2 = std::sqrt(std::norm(a2) + std::norm(b2));
          if (n1 == 0 || n2 == 0) continue;
          best = std::max(best, std::abs(a1 * b2 - a2 * b1) / (n1 * n2));
        }
      if (best < opts.min_jacobian_sine)
        throw GenericityFailure("all-chords-simple", "singular Jacobian at a solution");
      out.push_back({zr.center, wr.center, zr.real, wr.real, res, best, std::max(zr.radius, wr.radius)});
    }
    if (hits > 1) throw GenericityFailure("all-chords-simple", "two solutions share a coordinate");
  }
  for (int u : used_w)
    if (u > 1) throw GenericityFailure("all-chords-simple", "two solutions share a coordinate");
  return out;
}

std::vector<ParamSolution> solve_on_parameter_lines(const SystemBuilder& build, std::mt19937_64& rng,
                                                    const SolveOptions& opts) {
  for (const auto& rot : standard_rotations()) {
    std::vector<Equation> eqs = build(rot);
    if (solutions_at_infinity(eqs)) continue;
    std::vector<SystemSolution> sols;
    try {
      sols = solve_chart(eqs, rng, opts);
    } catch (const GenericityFailure& e) {
      if (e.flag() == "near-infinity") continue;
      throw;
    }
    std::vector<ParamSolution> out;
    out.reserve(sols.size());
    for (const auto& s : sols)
      out.push_back({rot.apply(s.z), rot.apply(s.w), s.z_real, s.w_real, s.residual, s.jacobian_sine, rot});
    return out;
  }
  throw GenericityFailure("no-crossing-at-chart-seam", "every parameter rotation left a solution at infinity");
}

}  // namespace shadecalc
