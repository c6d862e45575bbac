#include <random>

#include "doctest.h"
#include "shadecalc/curve.hpp"
#include "shadecalc/errors.hpp"
#include "shadecalc/projective.hpp"

using namespace shadecalc;

namespace {

BinaryForm form(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(v);
  int d = static_cast<int>(s.size()) - 1;
  return BinaryForm(d, std::move(s));
}

CurveModel kae(Rational a, int eps) {
  // [s^3, s t^2 + eps s^3, t^3 + eps s^2 t, a s^2 t]
  std::vector<Scalar> x3{Scalar(), Scalar(a), Scalar(), Scalar()};
  CurveModel m;
  m.components.emplace_back("K", std::vector<BinaryForm>{form({1, 0, 0, 0}), form({eps, 0, 1, 0}),
                                                          form({0, eps, 0, 1}), BinaryForm(3, x3)});
  return m;
}

CurveModel unknot() {
  CurveModel m;
  m.ambient = Ambient::q3(1);
  m.components.emplace_back("O", std::vector<BinaryForm>{form({1, 0, 1}), form({0, 2, 0}), form({1, 0, -1}),
                                                          form({0, 0, 0}), form({0, 0, 0})});
  return m;
}

}  // namespace

TEST_CASE("collinearity minors") {
  CVec p{0, 0, 0, 1};
  auto m = collinearity_minors(p, CVec{1, 0, 0, 0}, CVec{1, 0, 0, 1});
  for (auto v : m) CHECK(std::abs(v) == 0);
  auto n = collinearity_minors(p, CVec{1, Complex(0, 1), 0, 0}, CVec{1, Complex(0, -1), 0, 0});
  // rows {0,1,3} omit row 2
  CHECK(std::abs(n[2] - Complex(0, -2)) < 1e-15);
}

TEST_CASE("orientation of frames") {
  std::vector<RVec> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(orientation_sign(id) == 1);
  std::swap(id[0], id[1]);
  CHECK(orientation_sign(id) == -1);
  CHECK_THROWS_AS(orientation_sign({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), GenericityFailure);

  // (v, iv, u, w, f, if) with v=e3, u=e1, w=e2, f=e1+i e2; reduces to an even permutation.
  const Complex I(0, 1);
  CVec v{0, 0, 1}, u{1, 0, 0}, w{0, 1, 0}, f{1, I, 0};
  auto times_i = [&](CVec x) {
    for (auto& c : x) c *= I;
    return x;
  };
  std::vector<RVec> frame{realify(v), realify(times_i(v)), realify(u), realify(w), realify(f), realify(times_i(f))};
  CHECK(orientation_sign(frame) == 1);
}

TEST_CASE("quadric projection and residual") {
  std::vector<Scalar> x{Scalar(1), Scalar(1), Scalar(), Scalar(), Scalar()};
  CHECK(quadric_residual(x, Rational(1)).is_zero());
  x[2] = Scalar(1);
  CHECK(quadric_residual(x, Rational(1)) == Scalar(1));
  CHECK_THROWS_AS(pi_project(std::vector<Scalar>{Scalar(1), Scalar(), Scalar(), Scalar(), Scalar()}), DomainError);
  auto a = pi_project(CVec{1, 0.6, 0.8, 0, 0});
  auto b = pi_project(CVec{1, -0.6, -0.8, 0, 0});
  CHECK(std::abs(a[0] * b[1] - a[1] * b[0]) < 1e-15);
}

TEST_CASE("stereographic projection") {
  const double r2 = std::sqrt(2.0);
  Stereographic st({0, r2, 0, 0}, 2.0);
  auto o = st.map({0, -r2, 0, 0});
  for (double v : o) CHECK(std::abs(v) < 1e-15);
  auto e = st.map({r2, 0, 0, 0});
  CHECK(std::abs(e[0] * e[0] + e[1] * e[1] + e[2] * e[2] - 1) < 1e-12);
  CHECK_THROWS_AS(st.map({0, r2, 0, 0}), DomainError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 100; ++k) {
    RVec y{u(rng), u(rng), u(rng), u(rng)};
    double n = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3]);
    for (auto& v : y) v *= r2 / n;
    auto back = st.inverse(st.map(y));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(back[i] - y[i]) < 1e-10);
  }
}

TEST_CASE("line parameter tags") {
  const Complex I(0, 1);
  LineParam line(CVec{0, 0, 0, 1}, CVec{1, 0.5, 0.25, 0});
  CHECK(line.half_plane(CVec{1, 0.5, 0.25, I}) == 1);
  CHECK(line.half_plane(CVec{1, 0.5, 0.25, -I}) == -1);
  auto tau = line.tau(CVec{2, 1, 0.5, -1.5 * I});
  CHECK(std::abs(tau - Complex(0, -0.75)) < 1e-14);
  CHECK_THROWS_AS(line.tau(CVec{1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(LineParam(CVec{1, 0, 0, 0}, CVec{2, 0, 0, 0}), DomainError);
}

TEST_CASE("curve validation") {
  CHECK(validate(unknot()).valid);
  CHECK(validate(kae(Rational(1, 2), 1)).valid);
  CurveModel bad = unknot();
  bad.components[0].coords[1] = form({0, 3, 0});
  auto rep = validate(bad);
  CHECK(!rep.valid);
  CHECK(!rep.components[0].on_quadric);
  CurveModel based;
  based.components.emplace_back("B", std::vector<BinaryForm>{form({0, 1}), form({0, 2}), form({0, 3}), form({0, 0})});
  CHECK(!validate(based).valid);
  CHECK_THROWS_AS(require_valid(based), PreconditionViolation);
}

TEST_CASE("curve evaluation") {
  auto k = kae(Rational(1, 2), 1).components[0];
  auto x = eval_exact(k, Scalar(1), Scalar::i());
  CHECK(x[0] == Scalar(1));
  CHECK(x[1].is_zero());
  CHECK(x[2].is_zero());
  CHECK(x[3] == Scalar(Rational(0), Rational(1, 2)));
  auto o = unknot().components[0];
  auto y = eval_exact(o, Scalar(1), Scalar(0));
  CHECK(y[0] == Scalar(1));
  CHECK(y[2] == Scalar(1));
  auto tv = tangent_vector(o.projected(), Param::chart(0), 1);
  CHECK(std::abs(tv[0] - 2.0) < 1e-14);
  CHECK(std::abs(tv[1]) < 1e-14);
  CurveComponent cusp("C", {form({1, 0, 0, 0}), form({0, 0, 1, 0}), form({0, 0, 0, 1}), form({0, 0, 0, 0})});
  CHECK_THROWS_AS(tangent_vector(cusp, Param::chart(0), 0), GenericityFailure);
}

TEST_CASE("double points of the kae family") {
  auto minus = self_double_points(kae(Rational(0), -1));
  REQUIRE(minus.size() == 2);
  for (const auto& d : minus) {
    CHECK(d.kind == SelfKind::real_real);
    CHECK(std::abs(d.z.ratio() * d.w.ratio() + 1.0) < 1e-10);
    CHECK(std::abs(std::abs(d.z.ratio()) - 1.0) < 1e-10);
    CHECK(std::abs(d.image.x[0] - 1.0) < 1e-10);
  }
  auto plus = self_double_points(kae(Rational(0), 1));
  REQUIRE(plus.size() == 2);
  for (const auto& d : plus) {
    CHECK(d.kind == SelfKind::complex_conjugate);
    CHECK(std::abs(std::abs(d.z.ratio().imag()) - 1.0) < 1e-10);
  }
  CHECK(self_double_points(kae(Rational(1, 2), 1)).empty());
  CHECK(self_double_points(kae(Rational(1, 2), -1)).empty());
}

TEST_CASE("real locus") {
  auto pts = real_locus_sample(unknot(), 4);
  REQUIRE(pts.size() == 1);
  for (const auto& p : pts[0]) {
    CHECK(std::abs(p[3]) + std::abs(p[4]) == 0);
    CHECK(std::abs(-p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) < 1e-12);
  }
  const Scalar I = Scalar::i();
  CurveModel lp;
  lp.components.emplace_back("L", std::vector<BinaryForm>{BinaryForm(1, {Scalar(1), Scalar()}),
                                                           BinaryForm(1, {I, Scalar()}),
                                                           BinaryForm(1, {Scalar(), Scalar(1)}),
                                                           BinaryForm(1, {Scalar(), I})});
  CHECK_THROWS_AS(real_locus_sample(lp, 8), PreconditionViolation);
  CHECK(find_real_points(lp.components[0]).empty());
  CHECK_THROWS_AS(find_real_points(unknot().components[0]), PreconditionViolation);
}
