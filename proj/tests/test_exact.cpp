#include "doctest.h"
#include "shadecalc/errors.hpp"
#include "shadecalc/exact.hpp"

using namespace shadecalc;

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse("3/6").str() == "1/2");
  CHECK(Scalar::parse("-2").str() == "-2");
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("1/2+3/4 i").str() == "1/2+3/4i");
  CHECK(Scalar::parse("2-3i").str() == "2-3i");
  CHECK(Scalar::parse("-1/3i").str() == "-1/3i");
  CHECK(Scalar::parse("0.25") == Scalar(Rational(1, 4)));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
}

TEST_CASE("gaussian arithmetic") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar a(Rational(1), Rational(2));
  CHECK(a * a.conj() == Scalar(5));
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(a / Scalar(), DomainError);
  CHECK(Scalar(Rational(2), Rational(0)) == Scalar(2));
  CHECK(Scalar::from_double(0.5) == Scalar(Rational(1, 2)));
}

TEST_CASE("quadratic numbers") {
  auto q = QuadraticNumber::parse("0+1*sqrt(2)");
  CHECK(q.a == 0);
  CHECK(q.b == 1);
  CHECK(q.radicand == 2);
  CHECK(q.sign() == 1);
  CHECK(QuadraticNumber::parse("1-sqrt(2)").sign() == -1);
  CHECK(QuadraticNumber::parse("2-sqrt(4)").sign() == 0);
  CHECK(QuadraticNumber::parse("-3/2").sign() == -1);
  CHECK(QuadraticNumber::parse("3/2*sqrt(8)").to_double() == doctest::Approx(4.2426406871));
}
