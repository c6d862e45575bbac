#include <random>

#include "doctest.h"
#include "shadecalc/bivar.hpp"
#include "shadecalc/roots.hpp"

using namespace shadecalc;

namespace {

Scalar small_gaussian(std::mt19937_64& rng, bool real) {
  std::uniform_int_distribution<int> d(-9, 9);
  return real ? Scalar(Rational(d(rng))) : Scalar(Rational(d(rng)), Rational(d(rng)));
}

BivarPoly random_bivar(std::mt19937_64& rng, int dz, int dw, bool real) {
  std::vector<Poly> rows;
  for (int j = 0; j <= dw; ++j) {
    std::vector<Scalar> c;
    for (int i = 0; i <= dz; ++i) c.push_back(small_gaussian(rng, real));
    rows.emplace_back(std::move(c));
  }
  // Pin the leading w coefficient so the degree in w is exact.
  if (rows.back().is_zero()) rows.back() = Poly(Scalar(1));
  return BivarPoly(std::move(rows));
}

Poly random_poly(std::mt19937_64& rng, int d, bool real) {
  std::vector<Scalar> c;
  for (int k = 0; k < d; ++k) c.push_back(small_gaussian(rng, real));
  Scalar lead = small_gaussian(rng, real);
  c.push_back(lead.is_zero() ? Scalar(1) : lead);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("resultant matches the root product at sample points") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(1, 4);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const bool real = trial % 2 == 0;
    const int m = deg(rng), n = deg(rng);
    BivarPoly f = random_bivar(rng, deg(rng), m, real);
    BivarPoly g = random_bivar(rng, deg(rng), n, real);
    Poly r = resultant(f, g, Var::w);
    Scalar z0(Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4)));
    Poly fz = f.at_z(z0), gz = g.at_z(z0);
    if (fz.degree() != m || gz.degree() != n) continue;
    // Res = a^n prod g(alpha) over the roots alpha of f(z0, .)
    Complex prod = std::pow(fz.lead().to_complex(), n);
    for (const auto& root : complex_roots(fz))
      for (int k = 0; k < root.multiplicity; ++k) prod *= gz.eval(root.center);
    Complex exact = r.eval(z0).to_complex();
    CHECK(std::abs(exact - prod) <= 1e-8 * std::max(1.0, std::abs(exact)));
    ++checked;
  }
  CHECK(checked >= 150);
}

TEST_CASE("certified roots have small residuals and exact multiplicities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const bool real = trial % 3 != 0;
    Poly p = random_poly(rng, 1 + trial % 8, real);
    // Every fourth case gets a repeated factor.
    if (trial % 4 == 0) {
      Poly q = random_poly(rng, 1 + trial % 2, real);
      p = p * q * q;
    }
    auto roots = complex_roots(p);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      if (r.multiplicity == 1) {
        Complex v = p.eval(r.center);
        const double zr = std::max(1.0, std::abs(r.center));
        double scale = 0;
        for (int k = 0; k <= p.degree(); ++k) scale += std::abs(p.coeff(k).to_complex()) * std::pow(zr, k);
        CHECK(std::abs(v) <= 1e-10 * scale);
      }
      if (r.real) CHECK(r.center.imag() == 0);
    }
    CHECK(total == p.degree());
    if (p.is_real()) {
      // Non-real roots of real polynomials pair with their conjugates.
      for (const auto& r : roots) {
        if (r.real) continue;
        bool partner = false;
        for (const auto& s : roots)
          partner = partner || (std::abs(s.center - std::conj(r.center)) <= r.radius + s.radius + 1e-12 &&
                                s.multiplicity == r.multiplicity);
        CHECK(partner);
      }
    }
  }
}

TEST_CASE("sturm count agrees with certified real roots") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = squarefree_part(random_poly(rng, 1 + trial % 7, true));
    int real_count = 0;
    for (const auto& r : complex_roots(p)) real_count += r.real ? 1 : 0;
    auto ivs = real_roots_sturm(p, Rational(-100), Rational(100));
    CHECK(static_cast<int>(ivs.size()) == real_count);
  }
}
