#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadecalc/diagram.hpp"

namespace shadecalc {

struct InvariantOptions {
  std::uint64_t seed = 1;
  /// Number of distinct accepted centers that must agree.
  int centers = 1;
  bool use_fixture = false;
  int max_attempts = 50;
  Tolerances tol;
};

struct InvariantReport {
  /// Cw for real curves; for real-point-free curves Cw is left at zero and
  /// sh_part carries the shade number.
  Rational cw{0};
  Rational wr_part{0};
  Rational sh_part{0};
  bool real_point_free = false;
  /// lk(i, j) for i < j over component pairs of real curves.
  std::map<std::pair<int, int>, Rational> linking;
  /// One diagram per accepted center; front() is the reported one.
  std::vector<Diagram> diagrams;
  std::uint64_t seed = 1;
  Tolerances tol;
};

/// Seed of the k-th sub-computation derived from a user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

/// Throws PreconditionViolation if the curve has a double point.
void require_smooth(const CurveModel& curve, std::uint64_t seed = 1);

/// Cw = wr + sh of a smooth real curve, checked over opts.centers centers.
/// Throws InstabilityError if accepted centers disagree.
InvariantReport encomplexed_writhe(const CurveModel& curve, const InvariantOptions& opts = {});

/// Shade number of a curve without real points (half the signed count of
/// shade points).
InvariantReport shade_number_empty_real(const CurveModel& curve, const InvariantOptions& opts = {});

/// Dispatches on whether the curve has real coefficients.
InvariantReport compute_invariants(const CurveModel& curve, const InvariantOptions& opts = {});

Rational linking_number(const CurveModel& curve, int i, int j, const InvariantOptions& opts = {});

struct GaussEstimate {
  double value = 0;
  double error = 0;
  /// Closest approach between the polylines relative to their size.
  double min_separation = 0;
  bool accurate = true;
};

/// Gauss double integral of two closed polylines in R^3.
GaussEstimate gauss_linking_oracle(const std::vector<std::array<double, 3>>& a,
                                   const std::vector<std::array<double, 3>>& b);

/// Closed polyline of a real component carried to R^3: Q3 components by
/// stereographic projection, P3 components through their lift to the unit
/// sphere of R^4 (which doubles linking numbers of lines).
std::vector<std::array<double, 3>> component_polyline(const CurveModel& curve, int component, const RVec& pole,
                                                      int samples);

struct RangeShadePoint {
  double theta = 0;
  double phi = 0;
  int sign = 0;
};

struct RangeSample {
  Rational t{0};
  bool singular = false;
  Rational sh{0};
  std::vector<RangeShadePoint> points;
};

/// Shade number of the plane curve P(z1,z0) + i Q_t(z2,z0) = (1+i) z0^d on
/// the plane z1 + z2 - i z3 = 0, projected from [0,0,0,1]. Throws
/// PreconditionViolation if the root layout is not certified for K.
RangeSample range_family_shade(int d, const Rational& t, const Rational& big_k);

/// Polynomial in t vanishing exactly where the range curve has a real point.
Poly range_real_point_locus(int d, const Rational& big_k);

/// K_a(eps) = [s^3, s t^2 + eps s^3, t^3 + eps s^2 t, a s^2 t].
CurveModel kae_curve(const Rational& a, int epsilon);

struct Jump {
  Rational lo, hi;
  Rational delta;
  /// Range sweeps: the open interval contains a parameter with a real point.
  bool brackets_real_point = false;
};

struct SweepReport {
  std::string family;
  std::map<std::string, std::string> parameters;
  std::vector<Rational> grid;
  std::vector<std::optional<Rational>> values;
  std::vector<bool> singular;
  std::vector<std::string> errors;
  std::vector<Jump> jumps;
};

/// Grid a, a + step, ... up to b inclusive.
std::vector<Rational> make_grid(const Rational& a, const Rational& b, const Rational& step);

SweepReport sweep_kae(int epsilon, const std::vector<Rational>& grid, std::uint64_t seed = 1);
SweepReport sweep_range(int d, const Rational& big_k, const std::vector<Rational>& grid);

}  // namespace shadecalc
