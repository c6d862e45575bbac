#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace shadecalc {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exact Gaussian rational re + im*i. A value with zero imaginary part is the
/// rational re; both parts are kept in lowest terms.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  /// Exact value of a finite double.
  static Scalar from_double(double v);
  static Scalar from_complex(Complex z);
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  /// Accepts "p", "p/q", "p/q+r/s i", "r/s i", "i", "-i", "2-3i" and
  /// decimal integers; whitespace is ignored. Throws ParseError.
  static Scalar parse(const std::string& text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text: "p/q" for rationals, "a+bi" / "a-bi" otherwise.
  std::string str() const;

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses a rational "p/q" or an integer/decimal literal. Throws ParseError.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

/// a + b*sqrt(n) with rational a, b and positive integer n;
/// only used to carry exact fixture centers such as [1,0,sqrt(2),0,0].
struct QuadraticNumber {
  Rational a{0};
  Rational b{0};
  long radicand{1};

  /// Accepts everything parse_rational accepts plus "a+b*sqrt(n)",
  /// "b*sqrt(n)", "sqrt(n)" and "-sqrt(n)".
  static QuadraticNumber parse(const std::string& text);

  bool is_rational() const { return sgn(b) == 0 || radicand == 1; }
  int sign() const;
  double to_double() const;
  /// Canonical text accepted by parse().
  std::string str() const;
};

}  // namespace shadecalc
