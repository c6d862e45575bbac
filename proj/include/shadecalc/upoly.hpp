#pragma once

#include <utility>
#include <vector>

#include "shadecalc/exact.hpp"

namespace shadecalc {

/// Dense univariate polynomial over Gaussian rationals; coeffs()[k] multiplies
/// z^k. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(const Scalar& c) : Poly(std::vector<Scalar>{c}) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Scalar& c, int k);
  /// z - r
  static Poly linear_root(const Scalar& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_real() const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(); }
  const Scalar& lead() const { return c_.back(); }

  Scalar eval(const Scalar& z) const;
  Complex eval(Complex z) const;
  Poly derivative() const;
  Poly conj() const;
  Poly monic() const;
  /// Coefficient of z^k replaced by that of z^(deg-k).
  Poly reversed() const;
  /// p(z) -> p(a z + b)
  Poly compose_linear(const Scalar& a, const Scalar& b) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws DomainError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Exact quotient; throws DomainError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Yun decomposition p = lc * prod_m f_m^m with squarefree, pairwise coprime
/// monic f_m. Entry m-1 holds f_m (possibly constant 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

/// Sum of coefficient moduli, in double.
double coeff_norm1(const Poly& p);

}  // namespace shadecalc
