#include <doctest.h>

#include <random>

#include "convsum/arith.hpp"
#include "convsum/bigrational.hpp"
#include "convsum/errors.hpp"
#include "oracles.hpp"

using namespace convsum;

TEST_CASE("sigma small values") {
  CHECK(sigma(3, 2) == 9);
  CHECK(sigma(3, 14) == 3096);
  CHECK(sigma(1, 1) == 1);
  CHECK(sigma(1, 12) == 28);
  CHECK(sigma(0, 12) == 6);
  CHECK(sigma(3, 0) == 0);
  CHECK(sigma(1, -5) == 0);
  CHECK(sigma_at(3, 14, 7) == 9);
  CHECK(sigma_at(1, 7, 2) == 0);
}

TEST_CASE("sigma agrees with a direct divisor scan") {
  for (unsigned k = 0; k <= 3; ++k)
    for (std::int64_t n = 1; n <= 400; ++n) CHECK(sigma(k, n) == BigInt(static_cast<long>(oracle::sigma(k, n))));
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
  for (unsigned k : {1U, 3U})
    for (std::int64_t m = 1; m <= 200; ++m)
      for (std::int64_t n = m; n <= 200; n += 7)
        if (gcd(m, n) == 1) CHECK(sigma(k, m * n) == sigma(k, m) * sigma(k, n));
}

TEST_CASE("sigma table matches sigma") {
  for (unsigned k = 0; k <= 3; ++k) {
    SigmaTable t(k, 3000);
    for (std::int64_t n = 0; n <= 3000; n += 13) CHECK(BigInt(std::to_string(t(n))) == sigma(k, n));
    CHECK(t.at(14, 7) == t(2));
    CHECK(t.at(15, 7) == 0);
    CHECK_THROWS_AS(t(3001), std::out_of_range);
  }
}

TEST_CASE("divisors and factorization") {
  CHECK(divisors(26) == std::vector<std::int64_t>{1, 2, 13, 26});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(gcd(12, 18) == 6);
}

TEST_CASE("rational parsing and printing") {
  CHECK(BigRational::parse("-3/6").to_string() == "-1/2");
  CHECK(BigRational::parse("25").to_string() == "25/1");
  CHECK(BigRational(0).to_string() == "0/1");
  CHECK(BigRational::parse("4/-8") == BigRational(BigInt(-1), BigInt(2)));
  CHECK_THROWS_AS(BigRational::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(BigRational::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(BigRational::parse(""), InvalidArgument);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), InvalidArgument);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("rational arithmetic obeys field laws on 256-bit operands") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) {
    const BigRational a = oracle::random_rational(rng, 4);
    const BigRational b = oracle::random_rational(rng, 4);
    const BigRational c = oracle::random_rational(rng, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == BigRational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const BigRational p = a * b;
    CHECK(gcd(p.numerator(), p.denominator()) == 1);
    CHECK(p.denominator() > 0);
    CHECK(BigRational::parse(p.to_string()) == p);
  }
}

TEST_CASE("rational ordering") {
  CHECK(BigRational::parse("1/3") < BigRational::parse("1/2"));
  CHECK(BigRational::parse("-1/2") < BigRational(0));
  CHECK(BigRational(5).is_integer());
  CHECK_FALSE(BigRational::parse("5/2").is_integer());
}
