#include "shadecalc/bivar.hpp"

#include <algorithm>
#include <cmath>

#include "shadecalc/errors.hpp"
#include "shadecalc/parallel.hpp"

namespace shadecalc {

BivarPoly::BivarPoly(std::vector<Poly> rows) : rows_(std::move(rows)) { trim(); }

void BivarPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BivarPoly BivarPoly::from_matrix(const std::vector<std::vector<Scalar>>& c) {
  std::size_t nw = 0;
  for (const auto& row : c) nw = std::max(nw, row.size());
  std::vector<std::vector<Scalar>> by_w(nw, std::vector<Scalar>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) by_w[j][i] = c[i][j];
  std::vector<Poly> rows;
  rows.reserve(nw);
  for (auto& v : by_w) rows.emplace_back(std::move(v));
  return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::product(const Poly& pz, const Poly& pw) {
  std::vector<Poly> rows;
  rows.reserve(pw.coeffs().size());
  for (const auto& c : pw.coeffs()) rows.push_back(pz * c);
  return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::in(Var v, const Poly& p) {
  if (v == Var::z) return BivarPoly({p});
  return product(Poly(Scalar(1)), p);
}

int BivarPoly::deg_z() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

bool BivarPoly::is_real() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Poly& p) { return p.is_real(); });
}

Scalar BivarPoly::coeff(int i, int j) const {
  if (j < 0 || j > deg_w()) return Scalar();
  return rows_[j].coeff(i);
}

Poly BivarPoly::at_z(const Scalar& z0) const {
  std::vector<Scalar> v;
  v.reserve(rows_.size());
  for (const auto& r : rows_) v.push_back(r.eval(z0));
  return Poly(std::move(v));
}

Poly BivarPoly::at_w(const Scalar& w0) const {
  Poly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * Poly(w0) + *it;
  return acc;
}

Complex BivarPoly::eval(Complex z, Complex w) const {
  Complex acc{0, 0};
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * w + it->eval(z);
  return acc;
}

double BivarPoly::magnitude(Complex z, Complex w) const {
  double az = std::abs(z), aw = std::abs(w);
  double acc = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    double row = 0;
    const auto& c = it->coeffs();
    for (auto jt = c.rbegin(); jt != c.rend(); ++jt) row = row * az + std::abs(jt->to_complex());
    acc = acc * aw + row;
  }
  return acc;
}

Poly BivarPoly::z_coeff(int k) const {
  std::vector<Scalar> v;
  v.reserve(rows_.size());
  for (const auto& r : rows_) v.push_back(r.coeff(k));
  return Poly(std::move(v));
}

BivarPoly BivarPoly::swapped() const {
  int dz = deg_z();
  std::vector<Poly> rows;
  rows.reserve(dz + 1);
  for (int k = 0; k <= dz; ++k) rows.push_back(z_coeff(k));
  return BivarPoly(std::move(rows));
}

BivarPoly BivarPoly::conj() const {
  std::vector<Poly> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.conj());
  return BivarPoly(std::move(rows));
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] -= o.rows_[j];
  trim();
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> rows(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    for (std::size_t j = 0; j < b.rows_.size(); ++j) rows[i + j] += a.rows_[i] * b.rows_[j];
  return BivarPoly(std::move(rows));
}

BivarPoly operator*(const BivarPoly& a, const Scalar& s) {
  std::vector<Poly> rows;
  rows.reserve(a.rows_.size());
  for (const auto& r : a.rows_) rows.push_back(r * s);
  return BivarPoly(std::move(rows));
}

BivarPoly operator*(const BivarPoly& a, const Poly& pz) {
  std::vector<Poly> rows;
  rows.reserve(a.rows_.size());
  for (const auto& r : a.rows_) rows.push_back(r * pz);
  return BivarPoly(std::move(rows));
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = Scalar(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] * inv;
      for (std::size_t c = col + 1; c < n; ++c)
        if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Scalar sylvester_resultant(const Poly& f, int m, const Poly& g, int n) {
  const int size = m + n;
  if (size == 0) return Scalar(1);
  std::vector<std::vector<Scalar>> s(size, std::vector<Scalar>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = g.coeff(n - k);
  return determinant(std::move(s));
}

namespace {

// Newton interpolation through (k, values[k]), k = 0..N.
Poly interpolate_integer_nodes(std::vector<Scalar> values) {
  const std::size_t n = values.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k)
      values[k] = (values[k] - values[k - 1]) / Scalar(static_cast<long>(level));
  // values[k] now multiplies prod_{j<k} (z - j).
  Poly acc;
  for (std::size_t k = n; k-- > 0;) acc = acc * Poly::linear_root(Scalar(static_cast<long>(k))) + Poly(values[k]);
  return acc;
}

}  // namespace

Poly resultant(const BivarPoly& f, const BivarPoly& g, Var eliminate) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  if (eliminate == Var::z) return resultant(f.swapped(), g.swapped(), Var::w);
  const int m = f.deg_w(), n = g.deg_w();
  if (m <= 0 || n <= 0) throw DomainError("resultant needs positive degree in the eliminated variable");
  const int bound = std::max(0, f.deg_z()) * n + std::max(0, g.deg_z()) * m;
  std::vector<Scalar> values(static_cast<std::size_t>(bound) + 1);
  parallel_for(values.size(), [&](std::size_t k) {
    Scalar z0(static_cast<long>(k));
    values[k] = sylvester_resultant(f.at_z(z0), m, g.at_z(z0), n);
  });
  return interpolate_integer_nodes(std::move(values));
}

bool is_constant(const BivarPoly& f) { return f.deg_w() == 0 && f.row(0).degree() == 0; }

std::optional<BivarPoly> exact_divide(const BivarPoly& f, const BivarPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return BivarPoly();
  if (f.deg_w() < g.deg_w()) return std::nullopt;
  std::vector<Poly> rem = f.rows();
  std::vector<Poly> q(static_cast<std::size_t>(f.deg_w() - g.deg_w()) + 1);
  const int dg = g.deg_w();
  for (int k = f.deg_w(); k >= dg; --k) {
    if (rem[k].is_zero()) continue;
    auto [t, r] = divmod(rem[k], g.lead_w());
    if (!r.is_zero()) return std::nullopt;
    for (int j = 0; j <= dg; ++j) rem[k - dg + j] -= t * g.row(j);
    q[k - dg] = std::move(t);
  }
  for (int j = 0; j < dg; ++j)
    if (!rem[j].is_zero()) return std::nullopt;
  return BivarPoly(std::move(q));
}

namespace {

Poly content(const BivarPoly& f) {
  Poly c;
  for (const auto& r : f.rows()) {
    c = gcd(c, r);
    if (c.degree() == 0) break;
  }
  return c;
}

BivarPoly primitive_part(const BivarPoly& f) {
  Poly c = content(f);
  std::vector<Poly> rows;
  rows.reserve(f.rows().size());
  for (const auto& r : f.rows()) rows.push_back(exact_div(r, c));
  return BivarPoly(std::move(rows));
}

BivarPoly normalized(const BivarPoly& f) {
  if (f.is_zero()) return f;
  return f * (Scalar(1) / f.lead_w().lead());
}

// lc(b)^k * a reduced modulo b in w.
BivarPoly pseudo_remainder(const BivarPoly& a, const BivarPoly& b) {
  std::vector<Poly> r = a.rows();
  const int db = b.deg_w();
  const Poly& lb = b.lead_w();
  while (static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    Poly lr = r.back();
    for (auto& row : r) row = row * lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.row(j);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return BivarPoly(std::move(r));
}

}  // namespace

BivarPoly gcd(const BivarPoly& f, const BivarPoly& g) {
  if (f.is_zero()) return normalized(g);
  if (g.is_zero()) return normalized(f);
  Poly cg = gcd(content(f), content(g));
  BivarPoly a = primitive_part(f), b = primitive_part(g);
  if (a.deg_w() < b.deg_w()) std::swap(a, b);
  while (true) {
    if (b.deg_w() == 0) {
      b = BivarPoly({Poly(Scalar(1))});
      break;
    }
    BivarPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    a = std::move(b);
    b = primitive_part(r);
  }
  return normalized(b * cg);
}

Saturation saturate_factor(const BivarPoly& f, const BivarPoly& factor) {
  if (factor.is_zero()) throw DomainError("saturation by the zero polynomial");
  Saturation s{f, 0};
  if (is_constant(factor) || f.is_zero()) return s;
  while (auto q = exact_divide(s.result, factor)) {
    s.result = std::move(*q);
    ++s.order;
  }
  return s;
}

}  // namespace shadecalc
