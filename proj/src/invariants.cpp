#include "shadecalc/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "shadecalc/errors.hpp"
#include "shadecalc/parallel.hpp"
#include "shadecalc/roots.hpp"

namespace shadecalc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Sums {
  Rational wr{0}, sh{0};
  std::map<std::pair<int, int>, Rational> lk;
};

Sums sum_writhes(const Diagram& d, int components) {
  Sums s;
  for (int i = 0; i < components; ++i)
    for (int j = i + 1; j < components; ++j) s.lk[{i, j}] = 0;
  for (const auto& x : d.crossings) {
    switch (x.kind) {
      case CrossingKind::real_real:
        if (x.same_component)
          s.wr += x.writhe;
        else
          s.lk[{std::min(x.component_z, x.component_w), std::max(x.component_z, x.component_w)}] += Rational(x.writhe, 2);
        break;
      case CrossingKind::solitary:
        s.sh += x.writhe;
        break;
      case CrossingKind::shade:
        s.sh += Rational(x.writhe, 2);
        break;
    }
  }
  for (auto& [k, v] : s.lk) v.canonicalize();
  s.sh.canonicalize();
  return s;
}

std::string describe(const Sums& s) {
  std::ostringstream o;
  o << "wr=" << s.wr << " sh=" << s.sh;
  for (const auto& [k, v] : s.lk) o << " lk" << k.first << k.second << "=" << v;
  return o.str();
}

bool same_center(const ProjectionCenter& a, const ProjectionCenter& b) {
  if (a.pole_sign != b.pole_sign || a.c.size() != b.c.size()) return false;
  // Proportional rational vectors are the same point.
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = i + 1; j < a.c.size(); ++j)
      if (a.c[i] * b.c[j] != a.c[j] * b.c[i]) return false;
  return true;
}

InvariantReport run_centers(const CurveModel& curve, const InvariantOptions& opts) {
  InvariantReport rep;
  rep.seed = opts.seed;
  rep.tol = opts.tol;
  const int n = static_cast<int>(curve.components.size());
  std::optional<Sums> first;
  for (std::uint64_t k = 0; static_cast<int>(rep.diagrams.size()) < std::max(1, opts.centers); ++k) {
    if (k > static_cast<std::uint64_t>(opts.centers) + 20) throw GenericityExhausted("too few distinct centers", {});
    CenterOptions co;
    co.max_attempts = opts.max_attempts;
    co.tol = opts.tol;
    co.use_fixture = opts.use_fixture && k == 0;
    Diagram d = select_center(curve, derive_seed(opts.seed, k), co);
    if (std::any_of(rep.diagrams.begin(), rep.diagrams.end(),
                    [&](const Diagram& e) { return same_center(e.center, d.center); }))
      continue;
    Sums s = sum_writhes(d, n);
    // Only wr + sh is expected to be center independent; the split is not.
    if (!first) {
      first = s;
    } else if (s.wr + s.sh != first->wr + first->sh || s.lk != first->lk) {
      throw InstabilityError("accepted centers disagree: " + describe(*first) + " vs " + describe(s));
    }
    rep.diagrams.push_back(std::move(d));
  }
  rep.wr_part = first->wr;
  rep.sh_part = first->sh;
  rep.linking = first->lk;
  return rep;
}

Poly range_poly(int d, const Rational& big_k, const Rational& shift, const Rational& step) {
  Poly p{Scalar(big_k)};
  for (int j = 1; j <= d; ++j) {
    Rational r = shift + step * j;
    r.canonicalize();
    p = p * Poly::linear_root(Scalar(r));
  }
  return p;
}

Rational cauchy_bound(const Poly& p) {
  Rational m = 0;
  const Rational lead = abs(p.lead().re());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k).re()) / lead));
  return m + 1;
}

std::vector<Rational> certified_roots(const Poly& p, int d, const char* what) {
  Rational b = cauchy_bound(p);
  auto ivs = real_roots_sturm(p, -b, b);
  if (static_cast<int>(ivs.size()) != d)
    throw PreconditionViolation(std::string(what) + " = 1 has " + std::to_string(ivs.size()) + " real roots, expected " +
                                std::to_string(d) + "; increase K");
  std::vector<Rational> out;
  const Rational width(1, mpz_class(1) << 96);
  for (auto& iv : ivs) out.push_back(refine_root(p, iv, width).mid());
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) { return k == 0 ? seed : splitmix(seed ^ splitmix(k)); }

void require_smooth(const CurveModel& curve, std::uint64_t seed) {
  for (const auto& p : self_double_points(curve, seed)) {
    if (p.component_z != p.component_w)
      throw PreconditionViolation("components '" + curve.components[p.component_z].label + "' and '" +
                                  curve.components[p.component_w].label + "' intersect");
    switch (p.kind) {
      case SelfKind::real_real:
        throw PreconditionViolation("curve has a real-real double point");
      case SelfKind::complex_conjugate:
        throw PreconditionViolation("curve has a complex-conjugate double point");
      case SelfKind::complex:
        throw PreconditionViolation("curve has a complex double point");
    }
  }
}

InvariantReport encomplexed_writhe(const CurveModel& curve, const InvariantOptions& opts) {
  require_valid(curve);
  if (!curve.all_real()) throw PreconditionViolation("encomplexed writhe needs real coefficients");
  require_smooth(curve, opts.seed);
  InvariantReport rep = run_centers(curve, opts);
  rep.cw = rep.wr_part + rep.sh_part;
  return rep;
}

InvariantReport shade_number_empty_real(const CurveModel& curve, const InvariantOptions& opts) {
  require_valid(curve);
  if (!curve.none_real()) throw PreconditionViolation("shade number of this kind needs non-real components");
  for (const auto& comp : curve.components) {
    auto pts = find_real_points(comp, opts.seed);
    if (!pts.empty()) {
      std::ostringstream o;
      o << "component '" << comp.label << "' has a real point at parameter (" << pts[0].s << ", " << pts[0].t << ")";
      throw PreconditionViolation(o.str());
    }
  }
  require_smooth(curve, opts.seed);
  InvariantReport rep = run_centers(curve, opts);
  rep.real_point_free = true;
  return rep;
}

InvariantReport compute_invariants(const CurveModel& curve, const InvariantOptions& opts) {
  if (curve.none_real()) return shade_number_empty_real(curve, opts);
  return encomplexed_writhe(curve, opts);
}

Rational linking_number(const CurveModel& curve, int i, int j, const InvariantOptions& opts) {
  const int n = static_cast<int>(curve.components.size());
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("linking number needs two distinct components");
  auto rep = encomplexed_writhe(curve, opts);
  return rep.linking.at({std::min(i, j), std::max(i, j)});
}

GaussEstimate gauss_linking_oracle(const std::vector<std::array<double, 3>>& a,
                                   const std::vector<std::array<double, 3>>& b) {
  if (a.size() < 3 || b.size() < 3) throw DomainError("polylines need at least three vertices");
  static const double x4[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
  static const double w4[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
  static const double x8[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                              0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
  static const double w8[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                              0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  auto sub = [](const std::array<double, 3>& p, const std::array<double, 3>& q) {
    return std::array<double, 3>{p[0] - q[0], p[1] - q[1], p[2] - q[2]};
  };
  double size = 0, sep = std::numeric_limits<double>::infinity();
  for (const auto& p : a)
    for (const auto& q : b) {
      auto d = sub(p, q);
      sep = std::min(sep, std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]));
    }
  for (const auto* poly : {&a, &b})
    for (std::size_t k = 0; k < poly->size(); ++k) {
      auto d = sub((*poly)[(k + 1) % poly->size()], (*poly)[k]);
      size += std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    }
  double i4 = 0, i8 = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    const auto& a0 = a[p];
    auto da = sub(a[(p + 1) % a.size()], a0);
    for (std::size_t q = 0; q < b.size(); ++q) {
      const auto& b0 = b[q];
      auto db = sub(b[(q + 1) % b.size()], b0);
      std::array<double, 3> cr{da[1] * db[2] - da[2] * db[1], da[2] * db[0] - da[0] * db[2],
                               da[0] * db[1] - da[1] * db[0]};
      auto rule = [&](const double* x, const double* w, int n) {
        double s = 0;
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            double su = 0.5 * (x[u] + 1), sv = 0.5 * (x[v] + 1);
            double r[3];
            for (int k = 0; k < 3; ++k) r[k] = a0[k] + su * da[k] - b0[k] - sv * db[k];
            double n2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
            s += 0.25 * w[u] * w[v] * (r[0] * cr[0] + r[1] * cr[1] + r[2] * cr[2]) / (n2 * std::sqrt(n2));
          }
        return s;
      };
      i4 += rule(x4, w4, 4);
      i8 += rule(x8, w8, 8);
    }
  }
  GaussEstimate g;
  g.value = i8 / (4 * std::numbers::pi);
  g.error = std::abs(i8 - i4) / (4 * std::numbers::pi) + 1e-12;
  g.min_separation = sep / size;
  g.accurate = g.min_separation > 1e-3;
  return g;
}

std::vector<std::array<double, 3>> component_polyline(const CurveModel& curve, int component, const RVec& pole,
                                                      int samples) {
  const auto& comp = curve.components.at(component);
  if (!comp.is_real()) throw PreconditionViolation("component '" + comp.label + "' has no real locus");
  const bool q3 = curve.ambient.kind == AmbientKind::Q3;
  const double c = q3 ? curve.ambient.c.get_d() : 1.0;
  Stereographic st(pole, c);
  // Odd-degree P3 components close up on the sphere after a full turn.
  const double span = (!q3 && comp.degree() % 2 == 1) ? 2 * std::numbers::pi : std::numbers::pi;
  std::vector<std::array<double, 3>> out;
  for (int k = 0; k < samples; ++k) {
    double al = span * k / samples;
    RVec x;
    for (const auto& f : comp.coords) x.push_back(f.eval(Complex(std::cos(al), 0), Complex(std::sin(al), 0)).real());
    RVec y;
    if (q3) {
      y = sphere_chart(x);
    } else {
      double n = 0;
      for (double v : x) n += v * v;
      n = std::sqrt(n);
      for (double v : x) y.push_back(v / n);
    }
    out.push_back(st.map(y));
  }
  return out;
}

Poly range_real_point_locus(int d, const Rational& big_k) {
  Rational step(1, d * d + 1);
  BivarPoly f = BivarPoly::in(Var::z, range_poly(d, big_k, 0, 1) - Poly(Scalar(1)));
  BivarPoly g = BivarPoly::in(Var::z, Poly(Scalar(big_k)));
  for (int k = 1; k <= d; ++k) {
    // -u - t - k step
    BivarPoly lin = BivarPoly::in(Var::z, Poly(std::vector<Scalar>{Scalar(Rational(-k) * step), Scalar(-1)})) +
                    BivarPoly::in(Var::w, Poly(std::vector<Scalar>{Scalar(0), Scalar(-1)}));
    g = g * lin;
  }
  g = g - BivarPoly::in(Var::z, Poly(Scalar(1)));
  return resultant(f, g, Var::z);
}

RangeSample range_family_shade(int d, const Rational& t, const Rational& big_k) {
  if (d < 1) throw DomainError("range family needs degree d >= 1");
  if (sgn(big_k) <= 0) throw DomainError("range family needs K > 0");
  RangeSample out;
  out.t = t;
  const Rational step(1, d * d + 1);
  const Poly p1 = range_poly(d, big_k, 0, 1) - Poly(Scalar(1));
  const Poly q1 = range_poly(d, big_k, t, step) - Poly(Scalar(1));
  auto thetas = certified_roots(p1, d, "P(u,1)");
  auto phis = certified_roots(q1, d, "Q_t(u,1)");
  // Real point iff some phi = -theta.
  if (gcd(p1, q1.compose_linear(Scalar(-1), Scalar(0))).degree() > 0) {
    out.singular = true;
    return out;
  }
  const Poly dp = p1.derivative(), dq = q1.derivative();
  const Complex I(0, 1);
  const CVec center{0, 0, 0, 1};
  Rational sum = 0;
  for (const auto& th : thetas)
    for (const auto& ph : phis) {
      double a = th.get_d(), b = ph.get_d();
      Complex pp = dp.eval(Scalar(th)).to_complex(), qq = dq.eval(Scalar(ph)).to_complex();
      CVec pt{1, a, b, -I * (a + b)};
      Complex f1 = -I * qq, f2 = pp;
      CVec f{0, f1, f2, -I * (f1 + f2)};
      int sign = solitary_writhe(pt, f, center);
      out.points.push_back({a, b, sign});
      sum += sign;
    }
  out.sh = sum / 2;
  out.sh.canonicalize();
  return out;
}

CurveModel kae_curve(const Rational& a, int epsilon) {
  auto form = [](std::vector<Scalar> c) {
    int d = static_cast<int>(c.size()) - 1;
    return BinaryForm(d, std::move(c));
  };
  const Scalar e(static_cast<long>(epsilon)), z, one(1);
  CurveModel m;
  m.components.emplace_back("K", std::vector<BinaryForm>{form({one, z, z, z}), form({e, z, one, z}),
                                                          form({z, e, z, one}), form({z, Scalar(a), z, z})});
  m.family = FamilyInfo{"kae", {{"a", rational_str(a)}, {"epsilon", std::to_string(epsilon)}}};
  return m;
}

std::vector<Rational> make_grid(const Rational& a, const Rational& b, const Rational& step) {
  if (sgn(step) <= 0) throw DomainError("grid step must be positive");
  if (b < a) throw DomainError("grid end precedes its start");
  std::vector<Rational> out;
  for (long k = 0;; ++k) {
    Rational v = a + step * k;
    v.canonicalize();
    if (v > b) break;
    out.push_back(v);
    if (out.size() > 1000000) throw DomainError("grid has too many samples");
  }
  return out;
}

namespace {

void find_jumps(SweepReport& r) {
  std::optional<std::size_t> prev;
  for (std::size_t k = 0; k < r.grid.size(); ++k) {
    if (r.singular[k] || !r.values[k]) continue;
    if (prev && *r.values[*prev] != *r.values[k]) {
      Rational delta = *r.values[k] - *r.values[*prev];
      delta.canonicalize();
      r.jumps.push_back({r.grid[*prev], r.grid[k], delta, false});
    }
    prev = k;
  }
}

}  // namespace

SweepReport sweep_kae(int epsilon, const std::vector<Rational>& grid, std::uint64_t seed) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
  SweepReport r;
  r.family = "kae";
  r.parameters = {{"epsilon", std::to_string(epsilon)}, {"seed", std::to_string(seed)}};
  r.grid = grid;
  r.values.assign(grid.size(), std::nullopt);
  r.errors.assign(grid.size(), "");
  std::vector<char> singular(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t k) {
    CurveModel m = kae_curve(grid[k], epsilon);
    const std::uint64_t s = derive_seed(seed, k + 1);
    try {
      require_smooth(m, s);
    } catch (const PreconditionViolation& e) {
      singular[k] = 1;
      r.errors[k] = e.what();
      return;
    }
    try {
      InvariantOptions o;
      o.seed = s;
      r.values[k] = encomplexed_writhe(m, o).cw;
    } catch (const std::exception& e) {
      r.errors[k] = e.what();
    }
  });
  r.singular.assign(singular.begin(), singular.end());
  find_jumps(r);
  return r;
}

SweepReport sweep_range(int d, const Rational& big_k, const std::vector<Rational>& grid) {
  if (d < 1) throw DomainError("range family needs degree d >= 1");
  SweepReport r;
  r.family = "range";
  r.parameters = {{"d", std::to_string(d)}, {"K", rational_str(big_k)}};
  r.grid = grid;
  r.values.assign(grid.size(), std::nullopt);
  r.errors.assign(grid.size(), "");
  std::vector<char> singular(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t k) {
    try {
      auto s = range_family_shade(d, grid[k], big_k);
      singular[k] = s.singular;
      if (!s.singular) r.values[k] = s.sh;
    } catch (const std::exception& e) {
      r.errors[k] = e.what();
    }
  });
  r.singular.assign(singular.begin(), singular.end());
  find_jumps(r);
  const Poly locus = range_real_point_locus(d, big_k);
  for (auto& j : r.jumps) {
    int n = sturm_count(locus, j.lo, j.hi);
    if (locus.eval(Scalar(j.hi)).is_zero()) --n;
    j.brackets_real_point = n > 0;
  }
  return r;
}

}  // namespace shadecalc
