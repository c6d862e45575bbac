#include "doctest.h"
#include "shadecalc/binary_form.hpp"
#include "shadecalc/bivar.hpp"
#include "shadecalc/errors.hpp"

using namespace shadecalc;

namespace {

// z - w and friends as coefficient matrices c[i][j] of z^i w^j.
BivarPoly bp(std::vector<std::vector<long>> c) {
  std::vector<std::vector<Scalar>> s;
  for (auto& row : c) {
    s.emplace_back();
    for (long v : row) s.back().emplace_back(v);
  }
  return BivarPoly::from_matrix(s);
}

Poly up(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(v);
  return Poly(s);
}

}  // namespace

TEST_CASE("univariate arithmetic") {
  Poly p = up({-1, 0, 1});
  Poly q = up({1, 1});
  CHECK(exact_div(p, q) == up({-1, 1}));
  CHECK(gcd(p, up({1, 2, 1})) == up({1, 1}));
  CHECK_THROWS_AS(exact_div(p, up({2, 1})), DomainError);
  auto sq = squarefree_decomposition(up({-1, 3, -3, 1}));  // (z-1)^3
  REQUIRE(sq.size() == 3);
  CHECK(sq[2] == up({-1, 1}));
  CHECK(up({1, 2, 3}).compose_linear(Scalar(2), Scalar(1)) == up({6, 16, 12}));
}

TEST_CASE("resultant examples") {
  BivarPoly zmw = bp({{0, -1}, {1}});
  BivarPoly zpw = bp({{0, 1}, {1}});
  Poly r = resultant(zmw, zpw, Var::w);
  // Sign follows the Sylvester layout; the value is 2z up to sign.
  CHECK((r == up({0, 2}) || r == up({0, -2})));

  BivarPoly f = bp({{0, 0, 1}, {0}, {1}});  // z^2 + w^2
  BivarPoly g = bp({{-1}, {0, 1}});          // z w - 1
  CHECK(resultant(f, g, Var::w) == up({1, 0, 0, 0, 1}));

  BivarPoly u = bp({{1, 1}, {2}});
  BivarPoly v = bp({{3}, {1, 1}});
  CHECK(resultant(zmw * u, zmw * v, Var::w).is_zero());
  CHECK_THROWS_AS(resultant(BivarPoly(), g, Var::w), DomainError);
}

TEST_CASE("resultant eliminating z is the swapped computation") {
  BivarPoly f = bp({{0, 0, 1}, {0}, {1}});
  BivarPoly g = bp({{-1}, {0, 1}});
  CHECK(resultant(f, g, Var::z) == resultant(f.swapped(), g.swapped(), Var::w));
}

TEST_CASE("bivariate gcd and saturation") {
  BivarPoly zmw = bp({{0, -1}, {1}});
  BivarPoly zpw = bp({{0, 1}, {1}});
  auto s = saturate_factor(zmw * zmw * zpw, zmw);
  CHECK(s.order == 2);
  CHECK(s.result == zpw);
  auto s0 = saturate_factor(zpw, zmw);
  CHECK(s0.order == 0);
  CHECK(s0.result == zpw);
  CHECK_THROWS_AS(saturate_factor(zpw, BivarPoly()), DomainError);

  BivarPoly a = bp({{1, 0, 1}, {0, 3}});  // 1 + w^2 + 3 z w
  BivarPoly g = gcd(zmw * a, zmw * zpw * bp({{2}, {1}}));
  CHECK(g == zmw * Scalar(-1));
  CHECK(is_constant(gcd(a, zpw)));
  BivarPoly zm1 = bp({{-1}, {1}});
  CHECK(gcd(zm1 * a, zm1 * bp({{0, 1}})) == zm1);
}

TEST_CASE("binary forms") {
  BivarPoly dummy;
  BinaryForm circle(2, {Scalar(1), Scalar(0), Scalar(1)});  // s^2 + t^2
  CHECK(circle.eval(Scalar(1), Scalar::i()).is_zero());
  BinaryForm x0(6, {Scalar(1), Scalar(0), Scalar(3), Scalar(0), Scalar(3), Scalar(0), Scalar(1)});
  CHECK(x0.eval(Scalar(1), Scalar(1)) == Scalar(8));
  BinaryForm s3(3, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(s3.dt().is_zero());
  CHECK_THROWS_AS(s3.eval(Scalar(), Scalar()), DomainError);
  CHECK(std::abs(x0.eval(Complex(1, 0), Complex(1, 0)) - 8.0) < 1e-12);
  CHECK(std::abs(x0.eval(Complex(0.3, 0), Complex(7, 0)) - x0.eval(Scalar::from_double(0.3), Scalar(7)).to_complex()) < 1e-6);
  // s d/dt - t d/ds of s^2 + t^2 vanishes.
  CHECK(circle.rotation_derivative().is_zero());
  BinaryForm st(2, {Scalar(0), Scalar(1), Scalar(0)});
  CHECK(st.rotation_derivative() == BinaryForm(2, {Scalar(1), Scalar(0), Scalar(-1)}));
  CHECK(common_root_degree({BinaryForm(1, {Scalar(1), Scalar(0)}), BinaryForm(1, {Scalar(1), Scalar(0)})}) == 1);
  CHECK(common_root_degree({st, circle}) == 0);
  // rotated chart of s: a - b z
  CHECK(BinaryForm(1, {Scalar(1), Scalar(0)}).rotated_chart(Scalar(Rational(3, 5)), Scalar(Rational(4, 5))) ==
        Poly({Scalar(Rational(3, 5)), Scalar(Rational(-4, 5))}));
}
