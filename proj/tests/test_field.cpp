#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5), f7(7);
  CHECK(f5.from_int(3) + f5.from_int(4) == f5.from_int(2));
  CHECK(f7.from_int(3).inv() == f7.from_int(5));
  for (long x = 0; x < 7; ++x) CHECK(f7.from_int(x) + f7.zero() == f7.from_int(x));
  CHECK(f7.from_int(-1) == f7.from_int(6));
  CHECK(to_string(f7.from_int(6)) == "-1");
  CHECK_THROWS_AS(f7.zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(f5.one() + f7.one(), FieldMismatch);
  CHECK_THROWS_AS(Fp() + Fp(), FieldMismatch);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 2) == Rational(5, 6));
  CHECK(Rational(-2, 3).inv() == Rational(-3, 2));
  CHECK(to_string(Rational(4, -6)) == "-2/3");
  CHECK(QQ.parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(QQ.zero().inv(), DivisionByZero);
}

TEST_CASE("primality check on construction") {
  CHECK_NOTHROW(PrimeField(65537));
  CHECK_NOTHROW(PrimeField(2305843009213693951ULL));  // 2^61 - 1
  CHECK_THROWS_AS(PrimeField(65535), FieldError);
  CHECK_THROWS_AS(PrimeField(1), FieldError);
  CHECK_THROWS(PrimeField(1ULL << 62));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("field spec strings") {
  CHECK(std::holds_alternative<RationalField>(parse_field_spec("Q")));
  auto f = parse_field_spec("Fp:65537");
  REQUIRE(std::holds_alternative<PrimeField>(f));
  CHECK(std::get<PrimeField>(f).modulus() == 65537);
  CHECK_THROWS(parse_field_spec("Fp:12"));
  CHECK_THROWS(parse_field_spec("R"));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  PrimeField big(2305843009213693951ULL);
  for (int i = 0; i < 1000; ++i) {
    auto a = big.random(rng), b = big.random(rng), c = big.random(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == big.one());
    auto qa = QQ.random(rng), qb = QQ.random(rng), qc = QQ.random(rng);
    CHECK(qa * (qb + qc) == qa * qb + qa * qc);
    if (!qa.is_zero()) CHECK(qa * qa.inv() == QQ.one());
  }
}

TEST_CASE("prime field agrees with big integers") {
  std::mt19937_64 rng(5);
  const std::uint64_t p = 2305843009213693951ULL;
  PrimeField f(p);
  mpz_class P(std::to_string(p));
  for (int i = 0; i < 10000; ++i) {
    auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    mpz_class A(std::to_string(a.value())), B(std::to_string(b.value())), C(std::to_string(c.value()));
    mpz_class want = (A * B + C) % P;
    CHECK((a * b + c).value() == std::stoull(want.get_str()));
  }
}

TEST_CASE("operation counting") {
  OpCounter ops;
  auto a = GF.from_int(3), b = GF.from_int(5);
  {
    CountingScope scope(ops);
    auto c = a * b + a;
    auto d = c / b;
    (void)-d;
    {
      CountingPause pause;
      (void)(a * b);
    }
  }
  (void)(a * b);
  CHECK(ops.multiplications == 2);
  CHECK(ops.inversions == 1);
  CHECK(ops.additions == 1);
  CHECK(ops.basic() == 3);
}
