#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "shadecalc/curve.hpp"

namespace shadecalc {

struct ProjectionCenter {
  /// Rational point of RP3; for Q3 curves the image of the pole under the
  /// projection that drops x0.
  std::vector<Rational> c;
  /// Q3 only: which of the two quadric lifts +-sqrt(c) c/|c| is the pole.
  int pole_sign = 1;
  int attempt = 0;
  std::uint64_t seed = 0;
  bool fixture = false;

  CVec point() const;
  /// Q3 only: the pole in the affine chart x0 = 1.
  RVec pole(const Rational& quadric_scale) const;
};

/// Acceptance thresholds of one center analysis.
struct Tolerances {
  /// Parameter distance under which two chord solutions are identified.
  double pair = 1e-8;
  /// Smallest accepted normalized determinant in a sign recipe.
  double frame_margin = 1e-6;
  /// Smallest image distance between crossings, and between the two ends of a chord.
  double separation = 1e-6;
};

struct GenericityCertificate {
  bool center_off_curve = false;
  bool all_chords_simple = false;
  bool no_triple_points = false;
  bool no_tangent_chords = false;
  bool no_crossing_at_chart_seam = false;
  double min_jacobian_sine = 0;
  double min_frame_margin = 0;

  bool accepted() const {
    return center_off_curve && all_chords_simple && no_triple_points && no_tangent_chords &&
           no_crossing_at_chart_seam;
  }
};

enum class CrossingKind { real_real, solitary, shade };

struct Crossing {
  CrossingKind kind = CrossingKind::real_real;
  Param z, w;
  int component_z = 0;
  int component_w = 0;
  bool same_component = true;
  int writhe = 0;
  /// Real image of the crossing in the projection plane (P2 coordinates).
  std::array<double, 3> image{};
  double residual = 0;
};

/// Raw chord solution of one component pair.
struct ChordSolution {
  ParamSolution sol;
  int component_z = 0;
  int component_w = 0;
};

struct Diagram {
  ProjectionCenter center;
  GenericityCertificate certificate;
  std::vector<Crossing> crossings;
  /// Unordered chord solutions that are neither real nor conjugate.
  int complex_pairs = 0;
  /// One line per rejected candidate center.
  std::vector<std::string> rejected;
};

struct CenterOptions {
  int max_attempts = 50;
  /// Use CurveModel::fixture_center as the first candidate.
  bool use_fixture = false;
  /// Test hook: force this candidate first.
  std::vector<Rational> forced;
  Tolerances tol;
};

/// The real-line components of the P3 image: Q3 curves are projected.
std::vector<CurveComponent> p3_components(const CurveModel& curve);

/// 3x3 minors of [p | X(z) | Y(w)].
std::vector<BivarPoly> collinearity_system(const std::vector<Rational>& p, const std::vector<Poly>& x,
                                           const std::vector<Poly>& y);

bool center_on_curve(const CurveModel& curve, const std::vector<Rational>& p);

std::vector<ChordSolution> chord_pairs(const CurveModel& curve, const ProjectionCenter& center,
                                       std::mt19937_64& rng);

/// Runs every check and sign recipe for one center; throws GenericityFailure
/// (or UncertifiedRoots) when the center is not generic.
Diagram analyze_center(const CurveModel& curve, const ProjectionCenter& center, const Tolerances& tol = {});

/// First generic center from a seeded stream of candidates. Throws
/// GenericityExhausted with the per-candidate reasons.
Diagram select_center(const CurveModel& curve, std::uint64_t seed, const CenterOptions& opts = {});

/// Sign of det[A, DA, B, DB] for homogeneous points and rotation tangents.
int real_crossing_writhe(const RVec& a, const RVec& da, const RVec& b, const RVec& db, double* margin = nullptr);

/// Frame recipe (v, u, w) in an affine chart; equals the homogeneous form with
/// A = (1, a), B = (1, a + u).
int frame_writhe(const RVec& v, const RVec& u, const RVec& w);

/// Sphere recipe for a real pair x, y on the quadric with chart tangents X, Y.
int sphere_real_pair_sign(const Stereographic& st, const RVec& x, const RVec& dx, const RVec& y, const RVec& dy,
                          double* margin = nullptr);

/// Local writhe of a solitary (or shade) point: a is the point, f its
/// homogeneous tangent, c the real center.
int solitary_writhe(const CVec& a, const CVec& f, const CVec& c, double* margin = nullptr);

/// 800x800 SVG of the projected real locus with crossing marks.
std::string render_diagram_svg(const CurveModel& curve, const Diagram& diagram, int samples = 720);

}  // namespace shadecalc
