#pragma once

#include <vector>

#include "shadecalc/exact.hpp"
#include "shadecalc/upoly.hpp"

namespace shadecalc {

/// Homogeneous polynomial of degree d in (s,t); coeffs()[k] multiplies
/// s^(d-k) t^k. Unlike Poly the degree is formal and kept even when leading
/// coefficients vanish.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Scalar> coeffs);
  static BinaryForm zero(int degree) { return BinaryForm(degree, std::vector<Scalar>(degree + 1)); }

  int degree() const { return d_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_real() const;
  bool is_zero() const;

  BinaryForm conj() const;
  /// Partial derivatives, forms of degree d-1.
  BinaryForm ds() const;
  BinaryForm dt() const;
  /// Rotation field s*d/dt - t*d/ds; same degree d.
  BinaryForm rotation_derivative() const;

  Scalar eval(const Scalar& s, const Scalar& t) const;
  Complex eval(Complex s, Complex t) const;

  /// f(1, z)
  Poly dehomogenize() const;
  /// f(a - b z, b + a z): the form seen through the rotation (s,t) ->
  /// (a s - b t, b s + a t), dehomogenized at s = 1.
  Poly rotated_chart(const Scalar& a, const Scalar& b) const;

  friend bool operator==(const BinaryForm& x, const BinaryForm& y) { return x.d_ == y.d_ && x.c_ == y.c_; }

 private:
  int d_ = 0;
  std::vector<Scalar> c_{Scalar()};
};

/// Degree of the gcd of the forms, counting a common root at t = infinity;
/// -1 when every form is zero.
int common_root_degree(const std::vector<BinaryForm>& forms);

}  // namespace shadecalc
