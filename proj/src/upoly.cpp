#include "shadecalc/upoly.hpp"

#include <cmath>

#include "shadecalc/errors.hpp"

namespace shadecalc {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Scalar& r) { return Poly({-r, Scalar(1)}); }

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

Scalar Poly::eval(const Scalar& z) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex Poly::eval(Complex z) const {
  Complex acc{0, 0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::conj() const {
  std::vector<Scalar> d;
  d.reserve(c_.size());
  for (const auto& c : c_) d.push_back(c.conj());
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Scalar inv = Scalar(1) / lead();
  return *this * inv;
}

Poly Poly::reversed() const { return Poly(std::vector<Scalar>(c_.rbegin(), c_.rend())); }

Poly Poly::compose_linear(const Scalar& a, const Scalar& b) const {
  Poly lin({b, a});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator-(const Poly& a) { return a * Scalar(-1); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Scalar inv = Scalar(1) / b.lead();
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    Scalar f = rem[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial does not divide exactly");
  return q;
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
  std::vector<Poly> out;
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = exact_div(f, a);
  Poly c = exact_div(fp, a);
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (p.degree() <= 0) return Poly(Scalar(1));
  Poly f = p.monic();
  return exact_div(f, gcd(f, f.derivative()));
}

double coeff_norm1(const Poly& p) {
  double s = 0;
  for (const auto& c : p.coeffs()) s += std::abs(c.to_complex());
  return s;
}

}  // namespace shadecalc
