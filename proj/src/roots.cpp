#include "shadecalc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "shadecalc/errors.hpp"

namespace shadecalc {

namespace {

// Double-precision image of a monic squarefree polynomial, scaled by its
// largest coefficient so evaluation stays in range.
struct FloatPoly {
  std::vector<Complex> c;  // c[k] multiplies z^k
  int degree() const { return static_cast<int>(c.size()) - 1; }

  // Newton correction p/p' evaluated through the reversed polynomial outside
  // the unit disk.
  Complex newton_ratio(Complex z) const {
    const int n = degree();
    if (std::abs(z) <= 1) {
      Complex p = c[n], dp = 0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[k];
      }
      return dp == Complex{} ? Complex{0, 0} : p / dp;
    }
    Complex y = 1.0 / z;
    Complex r = c[0], dr = 0;
    for (int k = 1; k <= n; ++k) {
      dr = dr * y + r;
      r = r * y + c[k];
    }
    // p(z) = z^n r(y), p'(z)/p(z) = n/z - y^2 r'(y)/r(y)
    if (r == Complex{}) return {0, 0};
    Complex logd = static_cast<double>(n) * y - y * y * dr / r;
    return logd == Complex{} ? Complex{0, 0} : 1.0 / logd;
  }
};

FloatPoly to_float(const Poly& p) {
  Rational big = 0;
  for (const auto& c : p.coeffs()) big = std::max({big, Rational(abs(c.re())), Rational(abs(c.im()))});
  FloatPoly f;
  f.c.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational re = c.re() / big, im = c.im() / big;
    f.c.emplace_back(re.get_d(), im.get_d());
  }
  return f;
}

std::vector<Complex> aberth(const FloatPoly& f, int max_iterations) {
  const int n = f.degree();
  // Initial radius from the Fujiwara-style bound on the monic polynomial.
  double lead = std::abs(f.c[n]);
  double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::pow(std::abs(f.c[k]) / lead, 1.0 / (n - k)));
  double radius = std::max(bound, 1e-3);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    double ang = 2 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius * (0.5 + 0.5 * (k + 1) / n), ang);
  }
  for (int it = 0; it < max_iterations; ++it) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      Complex ratio = f.newton_ratio(z[i]);
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

struct ExactEval {
  Scalar p;
  Scalar dp;
};

ExactEval eval_with_derivative(const Poly& f, const Scalar& z) {
  const auto& c = f.coeffs();
  Scalar p = c.back(), dp;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

Complex exact_newton(const Poly& f, Complex z) {
  Scalar x = Scalar::from_complex(z);
  ExactEval e = eval_with_derivative(f, x);
  if (e.dp.is_zero()) return z;
  return (x - e.p / e.dp).to_complex();
}

double abs_exact(const Scalar& v) {
  // sqrt of the exact norm; get_d saturates gracefully for tiny values.
  return std::sqrt(v.norm().get_d());
}

std::vector<double> weierstrass_radii(const Poly& f, const std::vector<Complex>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<double> r(n);
  double lead = abs_exact(f.lead());
  for (int i = 0; i < n; ++i) {
    double num = abs_exact(f.eval(Scalar::from_complex(z[i]))) / lead;
    double den = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) den *= std::abs(z[i] - z[j]);
    double ri = den > 0 ? n * num / den : std::numeric_limits<double>::infinity();
    // Rounding in the double denominator is covered by a relative margin.
    r[i] = ri * (1 + 1e-6 * n) + std::numeric_limits<double>::denorm_min();
  }
  return r;
}

bool disks_disjoint(const std::vector<CertifiedRoot>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i].center - roots[j].center) <= roots[i].radius + roots[j].radius) return false;
  return true;
}

}  // namespace

std::vector<CertifiedRoot> complex_roots(const Poly& p, const RootOptions& opts) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<CertifiedRoot> all;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    const Poly& f = factors[m];
    if (f.degree() <= 0) continue;
    FloatPoly ff = to_float(f);
    std::vector<Complex> z = aberth(ff, opts.max_aberth_iterations);
    std::vector<double> r;
    bool ok = false;
    for (int round = 0; round <= opts.max_refinement_rounds && !ok; ++round) {
      for (int pass = 0; pass < opts.polish_passes; ++pass)
        for (auto& zi : z) zi = exact_newton(f, zi);
      r = weierstrass_radii(f, z);
      ok = true;
      for (std::size_t i = 0; i < z.size() && ok; ++i) {
        if (!std::isfinite(r[i])) ok = false;
        for (std::size_t j = i + 1; j < z.size() && ok; ++j)
          if (std::abs(z[i] - z[j]) <= r[i] + r[j]) ok = false;
      }
      if (!ok) z = aberth(ff, opts.max_aberth_iterations * 2);
    }
    if (!ok) throw UncertifiedRoots("root disks of a degree-" + std::to_string(f.degree()) + " factor overlap", r);
    for (std::size_t i = 0; i < z.size(); ++i) all.push_back({z[i], r[i], static_cast<int>(m) + 1, false});
  }
  if (!disks_disjoint(all)) {
    std::vector<double> radii;
    for (const auto& c : all) radii.push_back(c.radius);
    throw UncertifiedRoots("root disks of distinct multiplicity classes overlap", radii);
  }
  if (p.is_real()) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto& a = all[i];
      if (std::abs(a.center.imag()) > a.radius) {
        // Exact rational roots get a denormal radius; test them exactly.
        if (std::abs(a.center.imag()) > 1e-12 * (1 + std::abs(a.center))) continue;
        if (!p.eval(Scalar::from_double(a.center.real())).is_zero()) continue;
        a.radius = 0;
      }
      Complex mirror = std::conj(a.center);
      bool alone = true;
      for (std::size_t j = 0; j < all.size() && alone; ++j)
        if (j != i && std::abs(mirror - all[j].center) <= a.radius + all[j].radius) alone = false;
      if (alone) {
        a.real = true;
        a.center = {a.center.real(), 0.0};
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return all;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_at(const Poly& p, const Rational& x) { return sgn(p.eval(Scalar(x)).re()); }

int variations(const std::vector<Poly>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Poly checked_real_squarefree(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  if (!p.is_real()) throw DomainError("Sturm sequence needs real coefficients");
  return squarefree_part(p);
}

}  // namespace

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  Poly q = checked_real_squarefree(p);
  if (q.degree() <= 0) return 0;
  auto chain = sturm_chain(q);
  return variations(chain, lo) - variations(chain, hi);
}

std::vector<RationalInterval> real_roots_sturm(const Poly& p, const Rational& lo, const Rational& hi) {
  Poly q = checked_real_squarefree(p);
  std::vector<RationalInterval> out;
  if (q.degree() <= 0 || lo > hi) return out;
  auto chain = sturm_chain(q);
  if (sign_at(q, lo) == 0) out.push_back({lo, lo});
  // Work stack of half-open (a, b] intervals, processed left to right.
  struct Piece {
    Rational a, b;
    int count;
  };
  std::vector<Piece> stack{{lo, hi, variations(chain, lo) - variations(chain, hi)}};
  std::vector<RationalInterval> found;
  while (!stack.empty()) {
    Piece piece = stack.back();
    stack.pop_back();
    if (piece.count == 0) continue;
    if (piece.count == 1) {
      if (sign_at(q, piece.b) == 0)
        found.push_back({piece.b, piece.b});
      else
        found.push_back({piece.a, piece.b});
      continue;
    }
    Rational m = (piece.a + piece.b) / 2;
    if (sign_at(q, m) == 0) {
      found.push_back({m, m});
      // m is counted in (a, m]; split around it with a nearby non-root.
      int left = variations(chain, piece.a) - variations(chain, m) - 1;
      int right = piece.count - left - 1;
      Rational eps = (piece.b - piece.a) / 1024;
      Rational ml = m - eps, mr = m + eps;
      while (sturm_count(q, ml, mr) != 1) {
        eps /= 2;
        ml = m - eps;
        mr = m + eps;
      }
      stack.push_back({mr, piece.b, right});
      stack.push_back({piece.a, ml, left});
      continue;
    }
    int vm = variations(chain, m);
    stack.push_back({m, piece.b, vm - variations(chain, piece.b)});
    stack.push_back({piece.a, m, variations(chain, piece.a) - vm});
  }
  std::sort(found.begin(), found.end(), [](const RationalInterval& x, const RationalInterval& y) { return x.lo < y.lo; });
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

RationalInterval refine_root(const Poly& p, RationalInterval iv, const Rational& width) {
  Poly q = checked_real_squarefree(p);
  if (q.degree() <= 0) throw DomainError("refining a root of a constant");
  auto chain = sturm_chain(q);
  while (iv.width() > width) {
    Rational m = iv.mid();
    if (sign_at(q, m) == 0) return {m, m};
    if (variations(chain, iv.lo) - variations(chain, m) >= 1)
      iv.hi = m;
    else
      iv.lo = m;
  }
  return iv;
}

}  // namespace shadecalc
