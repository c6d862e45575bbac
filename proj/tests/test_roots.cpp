#include "doctest.h"
#include "shadecalc/errors.hpp"
#include "shadecalc/roots.hpp"

using namespace shadecalc;

namespace {
Poly up(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(v);
  return Poly(s);
}
}  // namespace

TEST_CASE("roots of z^2+1") {
  auto r = complex_roots(up({1, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].center - Complex(0, -1)) < 1e-14);
  CHECK(std::abs(r[1].center - Complex(0, 1)) < 1e-14);
  CHECK(r[0].radius <= 1e-12);
  CHECK(!r[0].real);
}

TEST_CASE("trefoil chord quartic at rho=0") {
  // 3(1+t^2)^2 - 16 t^2 = 3 t^4 - 10 t^2 + 3
  auto r = complex_roots(up({3, 0, -10, 0, 3}));
  REQUIRE(r.size() == 4);
  int real = 0;
  for (auto& c : r) real += c.real;
  CHECK(real == 4);
  double want[] = {-std::sqrt(3.0), -1 / std::sqrt(3.0), 1 / std::sqrt(3.0), std::sqrt(3.0)};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(r[k].center - want[k]) < 1e-13);
  // t^2 = 5 +- 4 from 3(1+t^2)^2 - 16t^2 only after the u = t^2 reduction used
  // in the chord analysis: (t^2-1)(t^2-9) has roots +-1, +-3.
  auto s = complex_roots(up({9, 0, -10, 0, 1}));
  REQUIRE(s.size() == 4);
  CHECK(std::abs(s[0].center + 3.0) < 1e-13);
  CHECK(std::abs(s[1].center + 1.0) < 1e-13);
  CHECK(std::abs(s[2].center - 1.0) < 1e-13);
  CHECK(std::abs(s[3].center - 3.0) < 1e-13);
}

TEST_CASE("multiple root") {
  auto r = complex_roots(up({-1, 3, -3, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 3);
  CHECK(r[0].real);
  CHECK(std::abs(r[0].center - 1.0) < 1e-15);
  CHECK_THROWS_AS(complex_roots(Poly()), DomainError);
}

TEST_CASE("sturm isolation") {
  // 1000 (u-1)(u-2)(u-3) - 1
  Poly p = up({-6000 - 1, 11000, -6000, 1000});
  auto iv = real_roots_sturm(p, Rational(0), Rational(4));
  REQUIRE(iv.size() == 3);
  for (int k = 0; k < 3; ++k) {
    auto fine = refine_root(p, iv[k], Rational(1, 1000000));
    CHECK(std::abs(fine.mid().get_d() - (k + 1)) < 0.01);
  }
  CHECK(real_roots_sturm(up({1, 0, 1}), Rational(-10), Rational(10)).empty());
  auto cubic = real_roots_sturm(up({0, -1, 0, 1}), Rational(-2), Rational(2));
  REQUIRE(cubic.size() == 3);
  CHECK(cubic[0].contains(-1));
  CHECK(cubic[1].contains(0));
  CHECK(cubic[2].contains(1));
  CHECK(sturm_count(up({0, -1, 0, 1}), Rational(-2), Rational(2)) == 3);
  auto endpoint = real_roots_sturm(up({0, -1, 0, 1}), Rational(-1), Rational(1));
  CHECK(endpoint.size() == 3);
}
