#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "shadecalc/diagram.hpp"
#include "shadecalc/errors.hpp"
#include "shadecalc/invariants.hpp"

using namespace shadecalc;

namespace {

RVec random_rvec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  RVec v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

CVec random_cvec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  CVec v(n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v;
}

std::vector<std::pair<int, int>> kind_writhes(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& x : d.crossings) out.emplace_back(static_cast<int>(x.kind), x.writhe);
  std::sort(out.begin(), out.end());
  return out;
}

CurveModel reversed(CurveModel m) {
  for (auto& c : m.components) c = c.reversed();
  return m;
}

// x3 -> -x3 in P3 (x4 -> -x4 on the quadric).
CurveModel mirrored(CurveModel m) {
  const std::size_t k = m.ambient.kind == AmbientKind::Q3 ? 4 : 3;
  for (auto& c : m.components) {
    std::vector<Scalar> v = c.coords[k].coeffs();
    for (auto& x : v) x = -x;
    c.coords[k] = BinaryForm(c.coords[k].degree(), std::move(v));
  }
  return m;
}

}  // namespace

TEST_CASE("frame recipe equals the homogeneous determinant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    RVec a = random_rvec(rng, 3), u = random_rvec(rng, 3), v = random_rvec(rng, 3), w = random_rvec(rng, 3);
    RVec A{1, a[0], a[1], a[2]}, B{1, a[0] + u[0], a[1] + u[1], a[2] + u[2]};
    RVec DA{0, v[0], v[1], v[2]}, DB{0, w[0], w[1], w[2]};
    int s = frame_writhe(v, u, w);
    CHECK(real_crossing_writhe(A, DA, B, DB) == s);
    // Tangents are only defined modulo the point, and points up to sign.
    RVec DA2 = DA, A3 = A, DA3 = DA;
    for (int k = 0; k < 4; ++k) {
      DA2[k] += 0.7 * A[k];
      A3[k] = -A[k];
      DA3[k] = -DA[k];
    }
    CHECK(real_crossing_writhe(A, DA2, B, DB) == s);
    CHECK(real_crossing_writhe(A3, DA3, B, DB) == s);
    // Swapping the two strands keeps the sign.
    CHECK(real_crossing_writhe(B, DB, A, DA) == s);
  }
}

TEST_CASE("solitary writhe is well defined") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    RVec s = random_rvec(rng, 4), c = random_rvec(rng, 4);
    Complex tau(g(rng), g(rng));
    CVec a(4), ac(4);
    for (int k = 0; k < 4; ++k) {
      a[k] = s[k] + tau * c[k];
      ac[k] = std::conj(a[k]);
    }
    CVec f = random_cvec(rng, 4), fc(4);
    for (int k = 0; k < 4; ++k) fc[k] = std::conj(f[k]);
    CVec cc(c.begin(), c.end());
    int w = solitary_writhe(a, f, cc);
    // Complex rescaling of the tangent and of the point.
    Complex lam(g(rng), g(rng));
    CVec f2 = f, a2 = a;
    for (int k = 0; k < 4; ++k) {
      f2[k] *= lam;
      a2[k] *= lam;
    }
    CHECK(solitary_writhe(a, f2, cc) == w);
    CHECK(solitary_writhe(a2, f, cc) == w);
    // The conjugate preimage gives the same sign.
    CHECK(solitary_writhe(ac, fc, cc) == w);
  }
}

TEST_CASE("center on curve") {
  CurveModel o = fixture("unknot");
  CHECK(center_on_curve(o, {0, 1, 0, 0}));
  CHECK(center_on_curve(o, {1, 0, 0, 0}));
  CHECK_FALSE(center_on_curve(o, {0, 0, 1, 0}));
  CHECK_FALSE(center_on_curve(o, {1, 1, 1, 1}));

  CenterOptions co;
  co.forced = {0, 1, 0, 0};
  Diagram d = select_center(o, 1, co);
  REQUIRE_FALSE(d.rejected.empty());
  CHECK(d.rejected[0].find("center-off-curve") != std::string::npos);
  CHECK(d.certificate.accepted());

  co.max_attempts = 1;
  CHECK_THROWS_AS(select_center(o, 1, co), GenericityExhausted);
}

TEST_CASE("chord solutions of real curves are closed under conjugation") {
  for (const char* name : {"khalf_minus", "khalf_plus", "trefoil", "hopf_q3"}) {
    CurveModel m = fixture(name);
    std::mt19937_64 draw(17);
    std::uniform_int_distribution<int> d(-9, 9);
    int tested = 0;
    for (int trial = 0; trial < 12 && tested < 3; ++trial) {
      ProjectionCenter pc;
      pc.c = {Rational(d(draw)), Rational(d(draw)), Rational(d(draw), 2), Rational(1)};
      pc.seed = static_cast<std::uint64_t>(trial);
      std::mt19937_64 rng(trial);
      std::vector<ChordSolution> sols;
      try {
        if (center_on_curve(m, pc.c)) continue;
        sols = chord_pairs(m, pc, rng);
      } catch (const GenericityFailure&) {
        continue;
      }
      ++tested;
      for (const auto& s : sols) {
        bool found = false;
        for (const auto& t : sols)
          found = found || (t.component_z == s.component_z && t.component_w == s.component_w &&
                            param_distance(t.sol.z, s.sol.z.conj()) < 1e-8 &&
                            param_distance(t.sol.w, s.sol.w.conj()) < 1e-8);
        CHECK_MESSAGE(found, name);
      }
    }
    CHECK_MESSAGE(tested > 0, name);
  }
}

TEST_CASE("writhes are invariant under orientation reversal") {
  for (const char* name : {"unknot", "khalf_minus", "khalf_plus", "kneghalf_plus", "hopf_q3", "two_lines_p3",
                           "lp_line"}) {
    CurveModel m = fixture(name);
    for (std::uint64_t seed : {1, 2, 3}) {
      Diagram d = select_center(m, seed);
      Diagram r = analyze_center(reversed(m), d.center);
      CHECK_MESSAGE(kind_writhes(d) == kind_writhes(r), name);
    }
  }
  CurveModel k = fixture("trefoil_fixed_center");
  CenterOptions co;
  co.use_fixture = true;
  Diagram d = select_center(k, 1, co);
  CHECK(kind_writhes(d) == kind_writhes(analyze_center(reversed(k), d.center)));
}

TEST_CASE("mirror image negates every writhe") {
  for (const char* name : {"khalf_minus", "khalf_plus", "hopf_q3", "two_lines_p3"}) {
    CurveModel m = fixture(name);
    Diagram d = select_center(m, 4);
    ProjectionCenter pc = d.center;
    pc.c[3] = -pc.c[3];
    Diagram r = analyze_center(mirrored(m), pc);
    auto a = kind_writhes(d), b = kind_writhes(r);
    for (auto& [kind, w] : b) w = -w;
    std::sort(b.begin(), b.end());
    CHECK_MESSAGE(a == b, name);
  }
}

TEST_CASE("curves with double points are rejected before projection") {
  CHECK_THROWS_WITH_AS(require_smooth(fixture("k0_minus")), "curve has a real-real double point",
                       PreconditionViolation);
  CHECK_THROWS_WITH_AS(require_smooth(fixture("k0_plus")), "curve has a complex-conjugate double point",
                       PreconditionViolation);
  CHECK_NOTHROW(require_smooth(fixture("khalf_plus")));
}

TEST_CASE("svg diagram") {
  CurveModel k = fixture("trefoil_fixed_center");
  CenterOptions co;
  co.use_fixture = true;
  Diagram d = select_center(k, 1, co);
  std::string svg = render_diagram_svg(k, d);
  CHECK(svg.find("viewBox=\"0 0 800 800\"") != std::string::npos);
  CHECK(svg.find("id=\"crossing8\"") != std::string::npos);
  CHECK(svg.find("id=\"crossing9\"") == std::string::npos);
  CHECK(svg.find("id=\"solitary0\"") != std::string::npos);
  CHECK(svg.find("style=") == std::string::npos);
  CHECK(svg == render_diagram_svg(k, d));
}
