#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iwa/padic.hpp"

using namespace iwa;

TEST_CASE("odd prime recognition") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(5));
  CHECK(is_odd_prime(7));
  CHECK(is_odd_prime(97));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(4));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
}

TEST_CASE("prime powers and the word-size cap") {
  CHECK(prime_power(5, 3) == 125);
  CHECK(prime_power(3, 4) == 81);
  CHECK(prime_power(5, 20) == 95367431640625ULL);
  CHECK_THROWS_AS(prime_power(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(prime_power(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(prime_power(5, 40), std::invalid_argument);
}

TEST_CASE("wraparound at the modulus") {
  // 124 + 1 = 125 = 0 and 5 * 25 = 125 = 0 in Z/5^3.
  PAdicScalar a(5, 3, 124), b(5, 3, 1);
  CHECK((a + b).value() == 0);
  PAdicScalar c(5, 3, 5), d(5, 3, 25);
  CHECK((c * d).value() == 0);
  // 2 * 41 = 82 = 1 in Z/3^4.
  PAdicScalar e(3, 4, 2), f(3, 4, 41);
  CHECK((e * f).value() == 1);
}

TEST_CASE("from_int reduces negatives") {
  CHECK(PAdicScalar::from_int(5, 3, -1).value() == 124);
  CHECK(PAdicScalar::from_int(5, 3, -125).value() == 0);
  CHECK(PAdicScalar::from_int(5, 3, -126).value() == 124);
  CHECK(PAdicScalar::from_int(3, 4, 82).value() == 1);
}

TEST_CASE("valuation at precision 4 over p=5") {
  CHECK(PAdicScalar(5, 4, 50).valuation() == 2);
  CHECK(PAdicScalar(5, 4, 0).valuation() == 4);
  CHECK(PAdicScalar(5, 4, 7).valuation() == 0);
  CHECK(PAdicScalar(5, 4, 625).valuation() == 4);  // reduced to 0 first
}

TEST_CASE("ring mismatch is rejected") {
  PAdicScalar a(5, 3, 1), b(5, 4, 1), c(3, 3, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("unit inversion") {
  CHECK(PAdicScalar(5, 2, 1).invert_unit().value() == 1);
  CHECK(PAdicScalar(5, 2, 2).invert_unit().value() == 13);  // 2*13 = 26 = 1 mod 25
  CHECK_THROWS_AS(PAdicScalar(5, 2, 5).invert_unit(), std::domain_error);
  CHECK_THROWS_AS(PAdicScalar(5, 2, 0).invert_unit(), std::domain_error);
}

TEST_CASE("unit inversion round-trips on random units") {
  std::mt19937_64 rng(2024);
  PAdicScalar one = PAdicScalar::one(5, 20);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t v = rng() % one.modulus();
    if (v % 5 == 0) v += 1;
    PAdicScalar x(5, 20, v);
    CHECK(x * x.invert_unit() == one);
  }
}

TEST_CASE("valuation is additive under products") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t q = prime_power(5, 8);
    PAdicScalar x(5, 8, rng() % q), y(5, 8, rng() % q);
    int expect = x.valuation() + y.valuation();
    if (expect > 8) expect = 8;
    CHECK((x * y).valuation() == expect);
  }
}

TEST_CASE("unit root of the Hecke polynomial, frozen small cases") {
  // p=5, N=2, a_p=1: alpha = 21 since 21^2 - 21 + 5 = 425 = 0 mod 25,
  // and alpha*(a_p - alpha) = 21*5 = 105 = 5 mod 25.
  PAdicScalar alpha = unit_root(PAdicScalar(5, 2, 1));
  CHECK(alpha.value() == 21);
  PAdicScalar beta = PAdicScalar(5, 2, 1) - alpha;
  CHECK((alpha * beta).value() == 5);
  // p=5, N=1, a_p=2: the unit branch of x(x-2) = 0 mod 5.
  CHECK(unit_root(PAdicScalar(5, 1, 2)).value() == 2);
}

TEST_CASE("unit root at full precision satisfies the Hecke identities") {
  for (std::uint64_t ap : {1ULL, 2ULL, 3ULL, 4ULL, 6ULL, 123456789ULL}) {
    PAdicScalar a(5, 20, ap);
    PAdicScalar alpha = unit_root(a);
    PAdicScalar beta = a - alpha;
    CHECK(alpha.is_unit());
    CHECK((alpha.value() % 5) == (a.value() % 5));  // alpha = a_p mod p
    CHECK((alpha + beta) == a);
    CHECK((alpha * beta).value() == 5);  // product of roots is p
    CHECK(beta.valuation() == 1);
  }
  CHECK_THROWS_AS(unit_root(PAdicScalar(5, 20, 5)), std::domain_error);
  CHECK_THROWS_AS(unit_root(PAdicScalar(5, 20, 0)), std::domain_error);
}

TEST_CASE("unit root over p=3") {
  PAdicScalar a(3, 18, 2);
  PAdicScalar alpha = unit_root(a);
  PAdicScalar beta = a - alpha;
  CHECK((alpha * beta).value() == 3);
  CHECK(beta.valuation() == 1);
}

TEST_CASE("scalar powers") {
  PAdicScalar x(5, 4, 2);
  CHECK(pow_scalar(x, 0).value() == 1);
  CHECK(pow_scalar(x, 10).value() == 1024 % 625);
}
