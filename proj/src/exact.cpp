#include "shadecalc/exact.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "shadecalc/errors.hpp"

namespace shadecalc {

namespace {

std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

// Rational literal without sign handling beyond a leading '-'/'+'.
bool try_parse_rational(const std::string& s, Rational& out) {
  if (s.empty()) return false;
  std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) return false;
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") return false;
    for (std::size_t k = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; k < digits.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(digits[k]))) return false;
    mpz_class num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) return false;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    out = Rational(num, den);
    out.canonicalize();
    return true;
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  bool seen_slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (seen_slash || k == start || k + 1 == s.size()) return false;
      seen_slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      return false;
    }
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  if (out.set_str(body, 10) != 0) return false;
  if (sgn(out.get_den()) == 0) return false;
  out.canonicalize();
  return true;
}

// Finds the split between real and imaginary parts: last '+'/'-' not at
// position 0 and not directly after '/'.
std::size_t split_point(const std::string& s) {
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') return k;
  return std::string::npos;
}

bool parse_imag_term(const std::string& term, Rational& out) {
  // term ends in 'i'; coefficient may be empty, "+", "-", or "p/q", with an
  // optional '*' before the 'i'.
  std::string coef = term.substr(0, term.size() - 1);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  if (coef.empty() || coef == "+") {
    out = 1;
    return true;
  }
  if (coef == "-") {
    out = -1;
    return true;
  }
  return try_parse_rational(coef, out);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational q;
  if (!try_parse_rational(strip_spaces(text), q)) throw ParseError("bad rational literal '" + text + "'");
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

Scalar Scalar::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value cannot be made exact");
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  return Scalar(q);
}

Scalar Scalar::from_complex(Complex z) {
  Scalar r = from_double(z.real());
  Scalar i = from_double(z.imag());
  return Scalar(r.re(), i.re());
}

Scalar Scalar::parse(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty coefficient");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  std::size_t cut = split_point(s);
  Rational re{0}, im{0};
  if (cut == std::string::npos) {
    if (!parse_imag_term(s, im)) throw ParseError("bad imaginary literal '" + text + "'");
    return Scalar(re, im);
  }
  if (!try_parse_rational(s.substr(0, cut), re) || !parse_imag_term(s.substr(cut), im))
    throw ParseError("bad gaussian rational literal '" + text + "'");
  return Scalar(re, im);
}

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string im_part;
  Rational mag = abs(im_);
  im_part = mag == 1 ? "i" : rational_str(mag) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
  return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Scalar num = *this * o.conj();
  re_ = num.re_ / n;
  im_ = num.im_ / n;
  return *this;
}

QuadraticNumber QuadraticNumber::parse(const std::string& text) {
  std::string s = strip_spaces(text);
  QuadraticNumber out;
  std::size_t pos = s.find("sqrt(");
  if (pos == std::string::npos) {
    out.a = parse_rational(s);
    return out;
  }
  std::size_t close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) throw ParseError("bad quadratic literal '" + text + "'");
  Rational n = parse_rational(s.substr(pos + 5, close - pos - 5));
  if (n.get_den() != 1 || sgn(n) <= 0 || !n.get_num().fits_slong_p())
    throw ParseError("radicand must be a positive integer in '" + text + "'");
  out.radicand = n.get_num().get_si();
  // Head before sqrt: "[a(+|-)][b*]" or "[+|-]".
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t cut = std::string::npos;
  for (std::size_t k = head.size(); k-- > 1;)
    if ((head[k] == '+' || head[k] == '-') && head[k - 1] != '/') {
      cut = k;
      break;
    }
  std::string coef = head;
  if (cut != std::string::npos) {
    out.a = parse_rational(head.substr(0, cut));
    coef = head.substr(cut);
  }
  if (coef.empty() || coef == "+") {
    out.b = 1;
  } else if (coef == "-") {
    out.b = -1;
  } else {
    out.b = parse_rational(coef);
  }
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), mpz_class(out.radicand).get_mpz_t());
  if (root * root == out.radicand) {
    out.a += out.b * Rational(root);
    out.b = 0;
    out.radicand = 1;
  }
  return out;
}

int QuadraticNumber::sign() const {
  if (is_rational()) return sgn(a + b * (radicand == 1 ? 1 : 0));
  int sa = sgn(a), sb = sgn(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(n) have opposite signs: compare a^2 with b^2 n.
  Rational lhs = a * a, rhs = b * b * radicand;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
  return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(radicand));
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return rational_str(a + (radicand == 1 ? b : Rational(0)));
  std::string root = "sqrt(" + std::to_string(radicand) + ")";
  std::string tail;
  if (b == 1) tail = root;
  else if (b == -1) tail = "-" + root;
  else tail = rational_str(b) + "*" + root;
  if (sgn(a) == 0) return tail;
  return rational_str(a) + (sgn(b) > 0 ? "+" : "") + tail;
}

}  // namespace shadecalc
