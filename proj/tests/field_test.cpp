#include <random>

#include "doctest.h"
#include "harmonia/field.hpp"

using namespace harmonia;

namespace {

// Independent inverse oracle: linear search for k with a*k == 1 mod p.
long brute_inverse(long a, long p) {
  for (long k = 1; k < p; ++k)
    if (a * k % p == 1) return k;
  return -1;
}

Scalar random_rational(std::mt19937_64& g) {
  long num = static_cast<long>(g() % 41) - 20;
  long den = static_cast<long>(g() % 12) + 1;
  return Scalar(Field::rational(), num, den);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rational();
  CHECK(Scalar(q, 1, 2) + Scalar(q, 1, 3) == Scalar(q, 5, 6));
  CHECK((Scalar(q, 1, 2) + Scalar(q, 1, 3)).to_string() == "5/6");
  CHECK(Scalar(q, 4, -6).to_string() == "-2/3");
  CHECK((-Scalar::zero(q)).is_zero());
  CHECK(Scalar(q, 3, 4) / Scalar(q, 3, 4) == Scalar::one(q));
}

TEST_CASE("prime field inverse matches brute force") {
  Field f = Field::prime(7);
  CHECK(Scalar(f, 3).inverse() == Scalar(f, brute_inverse(3, 7)));
  CHECK(Scalar(f, 3).inverse().residue() == 5);
  for (long p : {2, 3, 5, 7, 11, 13})
    for (long a = 1; a < p; ++a) CHECK(Scalar(Field::prime(p), a).inverse().residue() == brute_inverse(a, p));
  CHECK((-Scalar::zero(f)).is_zero());
  CHECK(Scalar(f, -1).residue() == 6);
}

TEST_CASE("characteristic") {
  CHECK(Field::rational().characteristic() == 0);
  CHECK(Field::prime(5).characteristic() == 5);
  CHECK(Field::prime(2).characteristic() == 2);
}

TEST_CASE("errors") {
  Field q = Field::rational();
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  try {
    (void)(Scalar(q, 1) + Scalar(f5, 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  try {
    (void)(Scalar(f5, 1) * Scalar(Field::prime(7), 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  try {
    (void)Scalar(q, 0).inverse();
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS((void)(Scalar(f5, 2) / Scalar(f5, 5)), Error);
}

TEST_CASE("field axioms on random rational triples") {
  std::mt19937_64 g(1234);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_rational(g), b = random_rational(g), c = random_rational(g);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Scalar::zero(a.field()));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(a.field()));
    auto s = a * b + c;
    CHECK(gcd(mpz_class(s.rational().get_num()), mpz_class(s.rational().get_den())) == 1);
    CHECK(sgn(s.rational().get_den()) > 0);
  }
}

TEST_CASE("field axioms exhaustively over GF(p)") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    Field f = Field::prime(p);
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        for (long z = 0; z < p; ++z) {
          Scalar a(f, x), b(f, y), c(f, z);
          CHECK(a * (b + c) == a * b + a * c);
          CHECK((a * b) * c == a * (b * c));
        }
  }
}

TEST_CASE("Fermat's little theorem for p <= 11") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    Field f = Field::prime(p);
    for (long a = 0; a < p; ++a) {
      Scalar s(f, a);
      CHECK(s.pow(p) == s);
      CHECK(s.residue() < p);
    }
  }
}

TEST_CASE("text form") {
  CHECK(Scalar::parse("-3/6").to_string() == "-1/2");
  CHECK(Scalar::parse("+7").to_string() == "7");
  CHECK(Scalar::parse("4").field() == Field::rational());
  auto r = Scalar::parse("12 mod 7");
  CHECK(r.field() == Field::prime(7));
  CHECK(r.to_string() == "5 mod 7");
  CHECK(Scalar::parse(r.to_string()) == r);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse("abc"), Error);
  CHECK(Field::parse("gf(5)") == Field::prime(5));
  CHECK(Field::parse("rational") == Field::rational());
  CHECK_THROWS_AS(Field::parse("gf(6)"), Error);
}
