#pragma once

#include <array>
#include <vector>

#include "shadecalc/exact.hpp"

namespace shadecalc {

using CVec = std::vector<Complex>;
using RVec = std::vector<double>;

/// Point of P3 or P4 with complex double coordinates.
struct ProjPoint {
  CVec x;

  int dim() const { return static_cast<int>(x.size()) - 1; }
  /// Scaled so the largest-modulus coordinate is exactly 1.
  ProjPoint normalized() const;
  /// All products x_i conj(x_j) real within tol (relative to max |x|^2).
  bool is_real(double tol = 1e-9) const;
  ProjPoint conj() const;
  /// Real representative of a real point (phase removed, largest coordinate
  /// positive). Meaningful only when is_real holds.
  RVec real_representative() const;
};

/// Four 3x3 minors of the 4x3 matrix [p | x | y]; entry k omits row k.
std::array<Complex, 4> collinearity_minors(const CVec& p, const CVec& x, const CVec& y);
std::array<Scalar, 4> collinearity_minors(const std::vector<Scalar>& p, const std::vector<Scalar>& x,
                                          const std::vector<Scalar>& y);

/// Determinants by partial pivoting; columns are the given vectors.
double det_columns(const std::vector<RVec>& cols);
Complex det_columns(const std::vector<CVec>& cols);

/// Sign of det of the frame in chart coordinates. Throws GenericityFailure
/// ("degenerate-frame") when |det| / prod |v_k| falls below `threshold`.
int orientation_sign(const std::vector<RVec>& frame, double threshold = 1e-6);

/// Realification of complex vectors in the ordering (Re1, Im1, Re2, Im2, ...).
RVec realify(const CVec& v);

/// Drops x0: the branched double cover of the quadric onto P3.
std::vector<Scalar> pi_project(const std::vector<Scalar>& x);
CVec pi_project(const CVec& x);

/// -c x0^2 + x1^2 + ... + x4^2 on the max-normalized representative.
Complex quadric_residual(const CVec& x, double c);
Scalar quadric_residual(const std::vector<Scalar>& x, const Rational& c);

/// Stereographic projection of the sphere |y|^2 = c in the affine chart x0=1
/// from `pole`, scaled so the equator is the unit sphere and -pole maps to 0.
/// The chart basis (e1, e2, e3) of pole^perp satisfies det[-pole, e1, e2, e3] > 0.
class Stereographic {
 public:
  Stereographic(RVec pole, double c);

  const RVec& pole() const { return pole_; }
  std::array<double, 3> map(const RVec& y) const;
  /// Differential at y applied to the tangent vector Y.
  std::array<double, 3> push(const RVec& y, const RVec& Y) const;
  RVec inverse(const std::array<double, 3>& s) const;

 private:
  RVec pole_;
  RVec unit_;
  std::array<RVec, 3> basis_;
  double radius_;
};

/// Affine chart image y = (x1..x4)/x0 of a real quadric point, and the pushed
/// tangent from a homogeneous tangent X.
RVec sphere_chart(const RVec& x);
RVec sphere_chart_tangent(const RVec& x, const RVec& X);

/// The line through s and c, swept as s + tau c.
class LineParam {
 public:
  LineParam(CVec c, CVec s);
  /// tau with x proportional to s + tau c. Throws DomainError if x is (close
  /// to) c or off the line.
  Complex tau(const CVec& x) const;
  /// +1 when Im tau(x) > 0, -1 when < 0, 0 for points of the real line.
  int half_plane(const CVec& x, double tol = 1e-12) const;

 private:
  CVec c_, s_;
  int k_ = 0, l_ = 1;
};

}  // namespace shadecalc
