#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "shadecalc/binary_form.hpp"
#include "shadecalc/bivar.hpp"

namespace shadecalc {

/// Homogeneous parameter (s, t) on the projective line.
struct Param {
  Complex s{1, 0};
  Complex t{0, 0};

  static Param chart(Complex z) { return {Complex{1, 0}, z}; }
  static Param infinity() { return {Complex{0, 0}, Complex{1, 0}}; }
  Param conj() const { return {std::conj(s), std::conj(t)}; }
  /// t/s, or a huge value near infinity.
  Complex ratio() const;
  /// Classical angle 2*atan(t/s) in (-pi, pi] for real parameters.
  double angle() const;
  bool is_real(double tol = 1e-12) const;
};

/// Distance between parameters as points of the Riemann sphere (chordal).
double param_distance(const Param& a, const Param& b);

/// Rational rotation (s,t) -> (a s - b t, b s + a t) with a^2 + b^2 = 1.
struct Rotation {
  Rational a{1};
  Rational b{0};
  Param apply(Complex z) const;
};

/// Identity first, then rotations from Pythagorean triples.
const std::vector<Rotation>& standard_rotations();

/// One polynomial of a two-parameter system and its formal bidegree.
struct Equation {
  BivarPoly f;
  int nz = 0;
  int nw = 0;
};

struct SystemSolution {
  Complex z, w;
  bool z_real = false;
  bool w_real = false;
  double residual = 0;
  double jacobian_sine = 0;
  double radius = 0;
};

struct SolveOptions {
  double accept_residual = 1e-8;
  double reject_residual = 1e-4;
  double min_jacobian_sine = 1e-6;
  double max_modulus = 1e6;
};

/// True when the bihomogenized system has a solution with z or w at infinity.
bool solutions_at_infinity(const std::vector<Equation>& eqs);

/// Finite isolated solutions of the system in one chart. Throws
/// GenericityFailure with flag "positive-dimensional", "ambiguous-pairing",
/// "all-chords-simple" or "near-infinity"; UncertifiedRoots propagates.
std::vector<SystemSolution> solve_chart(const std::vector<Equation>& eqs, std::mt19937_64& rng,
                                        const SolveOptions& opts = {});

/// A solution mapped back to homogeneous parameters.
struct ParamSolution {
  Param z, w;
  bool z_real = false;
  bool w_real = false;
  double residual = 0;
  double jacobian_sine = 0;
  Rotation rotation;
};

/// Builds the system for a rotation of the parameter line(s).
using SystemBuilder = std::function<std::vector<Equation>(const Rotation&)>;

/// Tries rotations until no solution sits at (or numerically near) infinity;
/// throws GenericityFailure("no-crossing-at-chart-seam") if all fail.
std::vector<ParamSolution> solve_on_parameter_lines(const SystemBuilder& build, std::mt19937_64& rng,
                                                    const SolveOptions& opts = {});

/// Removes every factor of g from f; returns the quotient and the removed
/// factor's (z, w) degrees.
struct SaturatedEquation {
  BivarPoly f;
  int removed_z = 0;
  int removed_w = 0;
};
SaturatedEquation saturate_fully(const BivarPoly& f, const BivarPoly& g);

/// Uniform integer in [lo, hi] from raw generator output (portable across
/// standard libraries).
long draw_int(std::mt19937_64& rng, long lo, long hi);

}  // namespace shadecalc
