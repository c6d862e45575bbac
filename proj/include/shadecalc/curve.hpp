#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shadecalc/binary_form.hpp"
#include "shadecalc/projective.hpp"
#include "shadecalc/system.hpp"

namespace shadecalc {

enum class AmbientKind { P3, Q3 };

/// P3, or the quadric -c x0^2 + x1^2 + ... + x4^2 = 0 in P4.
struct Ambient {
  AmbientKind kind = AmbientKind::P3;
  Rational c{1};
  int coords() const { return kind == AmbientKind::P3 ? 4 : 5; }
  static Ambient p3() { return {}; }
  static Ambient q3(const Rational& c) { return {AmbientKind::Q3, c}; }
};

struct CurveComponent {
  std::string label;
  std::vector<BinaryForm> coords;

  CurveComponent() = default;
  CurveComponent(std::string label, std::vector<BinaryForm> coords);

  int degree() const { return coords.empty() ? 0 : coords.front().degree(); }
  bool is_real() const;
  /// Coefficient-conjugated parameterization.
  CurveComponent conj() const;
  /// Same curve traversed backwards: t -> -t.
  CurveComponent reversed() const;
  /// First four or all five coordinate forms after dropping x0 (Q3 -> P3).
  CurveComponent projected() const;
};

struct FamilyInfo {
  std::string name;
  std::map<std::string, std::string> parameters;
};

struct CurveModel {
  Ambient ambient;
  std::vector<CurveComponent> components;
  std::optional<FamilyInfo> family;
  /// Exact test-fixture center (P3 point, or quadric point for Q3).
  std::vector<QuadraticNumber> fixture_center;

  bool all_real() const;
  bool none_real() const;
};

struct ComponentCheck {
  std::string label;
  int degree = 0;
  bool real = false;
  bool base_point_free = false;
  bool equal_degrees = false;
  bool on_quadric = true;
};

struct ValidationReport {
  bool valid = false;
  std::vector<ComponentCheck> components;
  std::vector<std::string> problems;
};

ValidationReport validate(const CurveModel& curve);
/// Throws PreconditionViolation listing the problems of an invalid curve.
void require_valid(const CurveModel& curve);

std::vector<Scalar> eval_exact(const CurveComponent& c, const Scalar& s, const Scalar& t);
ProjPoint eval_point(const CurveComponent& c, const Param& z);
/// Homogeneous derivative along conj(s) d/dt - conj(t) d/ds: the rotation
/// field on real parameters, and nonvanishing everywhere.
CVec homogeneous_tangent(const CurveComponent& c, const Param& z);
/// Derivative of the dehomogenized curve in chart `chart` (largest-modulus
/// coordinate when negative). Throws GenericityFailure("non-immersive").
CVec tangent_vector(const CurveComponent& c, const Param& z, int chart = -1);

enum class SelfKind { real_real, complex_conjugate, complex };

struct SelfIntersection {
  SelfKind kind = SelfKind::complex;
  Param z, w;
  int component_z = 0;
  int component_w = 0;
  ProjPoint image;
};

/// Singular points of the curve in its own ambient space: pairs z != w with
/// equal images. Closed under swapping and conjugation.
std::vector<SelfIntersection> self_double_points(const CurveModel& curve, std::uint64_t seed = 1);

/// n samples along the real parameter circle of every component.
std::vector<std::vector<RVec>> real_locus_sample(const CurveModel& curve, int n);

/// Parameters of the real points of a component with non-real coefficients.
std::vector<Param> find_real_points(const CurveComponent& c, std::uint64_t seed = 1);

/// 2x2 minors of [X(z) | Y(w)] for coordinate polynomials in the two chart
/// variables.
std::vector<BivarPoly> rank_one_minors(const std::vector<Poly>& x, const std::vector<Poly>& y);

/// Rotated chart polynomials of every coordinate.
std::vector<Poly> chart_polys(const CurveComponent& c, const Rotation& r);

}  // namespace shadecalc
