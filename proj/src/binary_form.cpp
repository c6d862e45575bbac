#include "shadecalc/binary_form.hpp"

#include <algorithm>

#include "shadecalc/errors.hpp"

namespace shadecalc {

BinaryForm::BinaryForm(int degree, std::vector<Scalar> coeffs) : d_(degree), c_(std::move(coeffs)) {
  if (degree < 0) throw DomainError("negative form degree");
  if (static_cast<int>(c_.size()) != degree + 1) throw DomainError("form coefficient count must be degree+1");
}

bool BinaryForm::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& c) { return c.is_real(); });
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& c) { return c.is_zero(); });
}

BinaryForm BinaryForm::conj() const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.conj());
  return BinaryForm(d_, std::move(v));
}

BinaryForm BinaryForm::ds() const {
  if (d_ == 0) return zero(0);
  std::vector<Scalar> v(d_);
  for (int k = 0; k < d_; ++k) v[k] = c_[k] * Scalar(static_cast<long>(d_ - k));
  return BinaryForm(d_ - 1, std::move(v));
}

BinaryForm BinaryForm::dt() const {
  if (d_ == 0) return zero(0);
  std::vector<Scalar> v(d_);
  for (int k = 1; k <= d_; ++k) v[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return BinaryForm(d_ - 1, std::move(v));
}

BinaryForm BinaryForm::rotation_derivative() const {
  // s * f_t contributes to t-exponent k-1 -> keeps total degree; t * f_s
  // shifts up by one.
  std::vector<Scalar> v(d_ + 1);
  for (int k = 1; k <= d_; ++k) v[k - 1] += c_[k] * Scalar(static_cast<long>(k));
  for (int k = 0; k < d_; ++k) v[k + 1] -= c_[k] * Scalar(static_cast<long>(d_ - k));
  return BinaryForm(d_, std::move(v));
}

Scalar BinaryForm::eval(const Scalar& s, const Scalar& t) const {
  if (s.is_zero() && t.is_zero()) throw DomainError("form evaluated at (0,0)");
  Scalar acc;
  Scalar tp(1);
  std::vector<Scalar> spow(d_ + 1);
  spow[0] = Scalar(1);
  for (int k = 1; k <= d_; ++k) spow[k] = spow[k - 1] * s;
  for (int k = 0; k <= d_; ++k) {
    if (!c_[k].is_zero()) acc += c_[k] * spow[d_ - k] * tp;
    tp = tp * t;
  }
  return acc;
}

Complex BinaryForm::eval(Complex s, Complex t) const {
  if (s == Complex{} && t == Complex{}) throw DomainError("form evaluated at (0,0)");
  // Horner in whichever ratio has modulus <= 1.
  Complex acc{0, 0};
  if (std::abs(t) <= std::abs(s)) {
    Complex r = t / s;
    for (int k = d_; k >= 0; --k) acc = acc * r + c_[k].to_complex();
    return acc * std::pow(s, d_);
  }
  Complex r = s / t;
  for (int k = 0; k <= d_; ++k) acc = acc * r + c_[k].to_complex();
  return acc * std::pow(t, d_);
}

Poly BinaryForm::dehomogenize() const { return Poly(c_); }

Poly BinaryForm::rotated_chart(const Scalar& a, const Scalar& b) const {
  Poly s({a, -b});
  Poly t({b, a});
  std::vector<Poly> spow(d_ + 1), tpow(d_ + 1);
  spow[0] = Poly(Scalar(1));
  tpow[0] = Poly(Scalar(1));
  for (int k = 1; k <= d_; ++k) {
    spow[k] = spow[k - 1] * s;
    tpow[k] = tpow[k - 1] * t;
  }
  Poly acc;
  for (int k = 0; k <= d_; ++k)
    if (!c_[k].is_zero()) acc += spow[d_ - k] * tpow[k] * c_[k];
  return acc;
}

int common_root_degree(const std::vector<BinaryForm>& forms) {
  Poly g;
  int at_infinity = -1;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    Poly p = f.dehomogenize();
    int missing = f.degree() - p.degree();
    at_infinity = at_infinity < 0 ? missing : std::min(at_infinity, missing);
    g = gcd(g, p);
  }
  if (at_infinity < 0) return -1;
  return g.degree() + at_infinity;
}

}  // namespace shadecalc
