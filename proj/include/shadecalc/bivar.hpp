#pragma once

#include <optional>
#include <vector>

#include "shadecalc/upoly.hpp"

namespace shadecalc {

enum class Var { z, w };

/// Dense polynomial in (z, w). Stored as a polynomial in w whose coefficients
/// are polynomials in z; coeff(i, j) multiplies z^i w^j.
class BivarPoly {
 public:
  BivarPoly() = default;
  /// rows[j] is the coefficient of w^j.
  explicit BivarPoly(std::vector<Poly> rows);
  /// Dense matrix c[i][j] of z^i w^j.
  static BivarPoly from_matrix(const std::vector<std::vector<Scalar>>& c);
  /// pz(z) * pw(w)
  static BivarPoly product(const Poly& pz, const Poly& pw);
  /// p(z) or p(w)
  static BivarPoly in(Var v, const Poly& p);

  bool is_zero() const { return rows_.empty(); }
  int deg_w() const { return static_cast<int>(rows_.size()) - 1; }
  int deg_z() const;
  bool is_real() const;
  const std::vector<Poly>& rows() const { return rows_; }
  const Poly& row(int j) const { return rows_[j]; }
  Scalar coeff(int i, int j) const;
  const Poly& lead_w() const { return rows_.back(); }

  /// f(z0, w) as a polynomial in w.
  Poly at_z(const Scalar& z0) const;
  /// f(z, w0) as a polynomial in z.
  Poly at_w(const Scalar& w0) const;
  Complex eval(Complex z, Complex w) const;
  /// Sum over terms of |c_ij| |z|^i |w|^j; the scale for relative residuals.
  double magnitude(Complex z, Complex w) const;
  /// Coefficient of z^k viewed as a polynomial in w.
  Poly z_coeff(int k) const;

  BivarPoly swapped() const;
  BivarPoly conj() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const Scalar& s);
  friend BivarPoly operator*(const BivarPoly& a, const Poly& pz);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.rows_ == b.rows_; }

 private:
  void trim();
  std::vector<Poly> rows_;
};

/// Sylvester resultant eliminating `eliminate`; the result is a polynomial in
/// the other variable. Computed by exact evaluation at integer nodes and
/// interpolation. Throws DomainError on zero input or degree 0 in the
/// eliminated variable.
Poly resultant(const BivarPoly& f, const BivarPoly& g, Var eliminate);

/// Determinant of a square matrix over the Gaussian rationals.
Scalar determinant(std::vector<std::vector<Scalar>> m);

/// Sylvester resultant of two univariate polynomials with given formal
/// degrees (leading zeros allowed).
Scalar sylvester_resultant(const Poly& f, int m, const Poly& g, int n);

/// Quotient if g divides f exactly, nullopt otherwise.
std::optional<BivarPoly> exact_divide(const BivarPoly& f, const BivarPoly& g);

/// gcd in Q(i)[z,w], normalized so the leading scalar (top w row, top z
/// coefficient) is 1. gcd(0, g) = normalized g.
BivarPoly gcd(const BivarPoly& f, const BivarPoly& g);

/// True for a nonzero polynomial of total degree 0.
bool is_constant(const BivarPoly& f);

struct Saturation {
  BivarPoly result;
  int order = 0;
};

/// Divides out the maximal power of `factor`. A constant factor yields order 0.
Saturation saturate_factor(const BivarPoly& f, const BivarPoly& factor);

}  // namespace shadecalc
