#include "shadecalc/projective.hpp"

#include <algorithm>
#include <cmath>

#include "shadecalc/errors.hpp"

namespace shadecalc {

namespace {

double norm(const RVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const RVec& a, const RVec& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

template <typename T>
T det_inplace(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  T det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == T(0)) return T(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      T f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

template <typename V>
auto rows_from_columns(const std::vector<V>& cols) {
  using T = typename V::value_type;
  const std::size_t n = cols.size();
  std::vector<std::vector<T>> m(n, std::vector<T>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != n) throw DomainError("determinant of a non-square frame");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  }
  return m;
}

template <typename T>
std::array<T, 4> minors_impl(const std::vector<T>& p, const std::vector<T>& x, const std::vector<T>& y) {
  if (p.size() != 4 || x.size() != 4 || y.size() != 4) throw DomainError("collinearity minors need points of P3");
  std::array<T, 4> out;
  for (int skip = 0; skip < 4; ++skip) {
    int r[3], n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != skip) r[n++] = k;
    out[skip] = p[r[0]] * (x[r[1]] * y[r[2]] - x[r[2]] * y[r[1]]) -
                x[r[0]] * (p[r[1]] * y[r[2]] - p[r[2]] * y[r[1]]) +
                y[r[0]] * (p[r[1]] * x[r[2]] - p[r[2]] * x[r[1]]);
  }
  return out;
}

}  // namespace

ProjPoint ProjPoint::normalized() const {
  std::size_t best = 0;
  for (std::size_t k = 1; k < x.size(); ++k)
    if (std::abs(x[k]) > std::abs(x[best])) best = k;
  if (std::abs(x[best]) == 0) throw DomainError("projective point with all coordinates zero");
  ProjPoint out{x};
  Complex inv = 1.0 / x[best];
  for (auto& v : out.x) v *= inv;
  out.x[best] = 1.0;
  return out;
}

bool ProjPoint::is_real(double tol) const {
  double scale = 0;
  for (const auto& v : x) scale = std::max(scale, std::norm(v));
  if (scale == 0) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (std::abs((x[i] * std::conj(x[j])).imag()) > tol * scale) return false;
  return true;
}

ProjPoint ProjPoint::conj() const {
  ProjPoint out{x};
  for (auto& v : out.x) v = std::conj(v);
  return out;
}

RVec ProjPoint::real_representative() const {
  ProjPoint n = normalized();
  RVec out;
  out.reserve(n.x.size());
  for (const auto& v : n.x) out.push_back(v.real());
  return out;
}

std::array<Complex, 4> collinearity_minors(const CVec& p, const CVec& x, const CVec& y) { return minors_impl(p, x, y); }

std::array<Scalar, 4> collinearity_minors(const std::vector<Scalar>& p, const std::vector<Scalar>& x,
                                          const std::vector<Scalar>& y) {
  return minors_impl(p, x, y);
}

double det_columns(const std::vector<RVec>& cols) { return det_inplace(rows_from_columns(cols)); }

Complex det_columns(const std::vector<CVec>& cols) { return det_inplace(rows_from_columns(cols)); }

int orientation_sign(const std::vector<RVec>& frame, double threshold) {
  double d = det_columns(frame);
  double scale = 1;
  for (const auto& v : frame) scale *= norm(v);
  if (scale == 0 || std::abs(d) < threshold * scale)
    throw GenericityFailure("degenerate-frame", "frame determinant below certification threshold");
  return d > 0 ? 1 : -1;
}

RVec realify(const CVec& v) {
  RVec out;
  out.reserve(2 * v.size());
  for (const auto& z : v) {
    out.push_back(z.real());
    out.push_back(z.imag());
  }
  return out;
}

std::vector<Scalar> pi_project(const std::vector<Scalar>& x) {
  if (x.size() != 5) throw DomainError("quadric projection needs a point of P4");
  std::vector<Scalar> out(x.begin() + 1, x.end());
  if (std::all_of(out.begin(), out.end(), [](const Scalar& v) { return v.is_zero(); }))
    throw DomainError("quadric projection is undefined at its center");
  return out;
}

CVec pi_project(const CVec& x) {
  if (x.size() != 5) throw DomainError("quadric projection needs a point of P4");
  CVec out(x.begin() + 1, x.end());
  double tail = 0;
  for (const auto& v : out) tail = std::max(tail, std::abs(v));
  if (tail <= 1e-14 * std::abs(x[0])) throw DomainError("quadric projection is undefined at its center");
  return out;
}

Complex quadric_residual(const CVec& x, double c) {
  ProjPoint n = ProjPoint{x}.normalized();
  Complex r = -c * n.x[0] * n.x[0];
  for (std::size_t k = 1; k < n.x.size(); ++k) r += n.x[k] * n.x[k];
  return r;
}

Scalar quadric_residual(const std::vector<Scalar>& x, const Rational& c) {
  // Exact points: normalize by the first nonzero coordinate.
  std::size_t k0 = 0;
  while (k0 < x.size() && x[k0].is_zero()) ++k0;
  if (k0 == x.size()) throw DomainError("projective point with all coordinates zero");
  Scalar inv = Scalar(1) / x[k0];
  Scalar r = Scalar(-c) * (x[0] * inv) * (x[0] * inv);
  for (std::size_t k = 1; k < x.size(); ++k) r += (x[k] * inv) * (x[k] * inv);
  return r;
}

Stereographic::Stereographic(RVec pole, double c) : pole_(std::move(pole)), radius_(std::sqrt(c)) {
  if (pole_.size() != 4) throw DomainError("stereographic pole must be a point of the affine 4-chart");
  double n = norm(pole_);
  if (std::abs(n - radius_) > 1e-9 * radius_) throw DomainError("stereographic pole is not on the sphere");
  unit_ = pole_;
  for (auto& v : unit_) v /= n;
  std::vector<RVec> picked;
  std::vector<bool> used(4, false);
  for (int round = 0; round < 3; ++round) {
    RVec best;
    int best_k = -1;
    double best_norm = 0;
    for (int k = 0; k < 4; ++k) {
      if (used[k]) continue;
      RVec e(4, 0.0);
      e[k] = 1;
      double a = dot(e, unit_);
      for (int i = 0; i < 4; ++i) e[i] -= a * unit_[i];
      for (const auto& q : picked) {
        double b = dot(e, q);
        for (int i = 0; i < 4; ++i) e[i] -= b * q[i];
      }
      double en = norm(e);
      if (en > best_norm) {
        best_norm = en;
        best = e;
        best_k = k;
      }
    }
    for (auto& v : best) v /= best_norm;
    used[best_k] = true;
    picked.push_back(best);
  }
  RVec minus_pole = unit_;
  for (auto& v : minus_pole) v = -v;
  if (det_columns({minus_pole, picked[0], picked[1], picked[2]}) < 0)
    for (auto& v : picked[2]) v = -v;
  basis_ = {picked[0], picked[1], picked[2]};
}

std::array<double, 3> Stereographic::map(const RVec& y) const {
  double den = radius_ - dot(y, unit_);
  if (std::abs(den) <= 1e-14 * radius_) throw DomainError("stereographic projection of the pole");
  return {dot(y, basis_[0]) / den, dot(y, basis_[1]) / den, dot(y, basis_[2]) / den};
}

std::array<double, 3> Stereographic::push(const RVec& y, const RVec& Y) const {
  double den = radius_ - dot(y, unit_);
  if (std::abs(den) <= 1e-14 * radius_) throw DomainError("stereographic projection of the pole");
  double dn = dot(Y, unit_);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = dot(Y, basis_[i]) / den + dot(y, basis_[i]) * dn / (den * den);
  return out;
}

RVec Stereographic::inverse(const std::array<double, 3>& s) const {
  RVec q(4, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 4; ++k) q[k] += radius_ * s[i] * basis_[i][k];
  double q2 = dot(q, q), r2 = radius_ * radius_;
  double mu = 2 * r2 / (q2 + r2);
  RVec y(4);
  for (int k = 0; k < 4; ++k) {
    double n = radius_ * unit_[k];
    y[k] = n + mu * (q[k] - n);
  }
  return y;
}

RVec sphere_chart(const RVec& x) {
  if (x.size() != 5 || x[0] == 0) throw DomainError("point is not in the affine quadric chart");
  return {x[1] / x[0], x[2] / x[0], x[3] / x[0], x[4] / x[0]};
}

RVec sphere_chart_tangent(const RVec& x, const RVec& X) {
  if (x.size() != 5 || X.size() != 5 || x[0] == 0) throw DomainError("point is not in the affine quadric chart");
  RVec out(4);
  for (int i = 1; i <= 4; ++i) out[i - 1] = (X[i] * x[0] - x[i] * X[0]) / (x[0] * x[0]);
  return out;
}

LineParam::LineParam(CVec c, CVec s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_.size() != s_.size()) throw DomainError("line through points of different spaces");
  double best = -1;
  for (int k = 0; k < static_cast<int>(c_.size()); ++k)
    for (int l = k + 1; l < static_cast<int>(c_.size()); ++l) {
      double v = std::abs(s_[k] * c_[l] - s_[l] * c_[k]);
      if (v > best) {
        best = v;
        k_ = k;
        l_ = l;
      }
    }
  double cs = 0, ss = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    cs = std::max(cs, std::abs(c_[k]));
    ss = std::max(ss, std::abs(s_[k]));
  }
  if (best <= 1e-12 * cs * ss) throw DomainError("line through coincident points");
}

Complex LineParam::tau(const CVec& x) const {
  Complex det = s_[k_] * c_[l_] - s_[l_] * c_[k_];
  Complex mu = (x[k_] * c_[l_] - x[l_] * c_[k_]) / det;
  Complex nu = (s_[k_] * x[l_] - s_[l_] * x[k_]) / det;
  double xs = 0, res = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    xs = std::max(xs, std::abs(x[k]));
    res = std::max(res, std::abs(x[k] - mu * s_[k] - nu * c_[k]));
  }
  if (res > 1e-8 * xs) throw DomainError("point is not on the line");
  if (std::abs(mu) <= 1e-12 * std::abs(nu)) throw DomainError("point coincides with the line's center");
  return nu / mu;
}

int LineParam::half_plane(const CVec& x, double tol) const {
  Complex t = tau(x);
  if (std::abs(t.imag()) <= tol * (1 + std::abs(t))) return 0;
  return t.imag() > 0 ? 1 : -1;
}

}  // namespace shadecalc
