#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "denum/errors.hpp"
#include "denum/exact_arith.hpp"

using denum::Count;
using denum::Int;

namespace {

// Independent binomial oracle: Pascal's triangle, additions only.
std::vector<std::vector<Count>> pascal_triangle(std::size_t rows) {
  std::vector<std::vector<Count>> triangle(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    triangle[i].assign(i + 1, Count(1));
    for (std::size_t j = 1; j < i; ++j) {
      triangle[i][j] = triangle[i - 1][j - 1] + triangle[i - 1][j];
    }
  }
  return triangle;
}

// Brute-force count of non-negative solutions of x_1 + ... + x_n = m.
Count enumerate_compositions(long m, unsigned n) {
  if (m < 0) {
    return 0;
  }
  if (n == 1) {
    return 1;
  }
  Count total = 0;
  for (long first = 0; first <= m; ++first) {
    total += enumerate_compositions(m - first, n - 1);
  }
  return total;
}

}  // namespace

TEST_CASE("gcd and lcm over a whole list") {
  const std::vector<Int> values{6, 10, 15};
  const auto result = denum::gcd_lcm_all(values);
  CHECK(result.gcd == 1);
  CHECK(result.lcm == 30);

  const std::vector<Int> single{4};
  const auto single_result = denum::gcd_lcm_all(single);
  CHECK(single_result.gcd == 4);
  CHECK(single_result.lcm == 4);

  const std::vector<Int> equal{2, 2, 2};
  const auto equal_result = denum::gcd_lcm_all(equal);
  CHECK(equal_result.gcd == 2);
  CHECK(equal_result.lcm == 2);
}

TEST_CASE("gcd_lcm_all rejects bad input") {
  CHECK_THROWS_AS(denum::gcd_lcm_all(std::vector<Int>{}),
                  denum::InvalidInputError);
  CHECK_THROWS_AS(denum::gcd_lcm_all(std::vector<Int>{3, 0, 5}),
                  denum::InvalidInputError);
}

TEST_CASE("lcm of coprime values exceeds 64 bits") {
  // First 16 odd primes: the lcm is their product, about 2^83.
  const std::vector<Int> primes{3,  5,  7,  11, 13, 17, 19, 23,
                                29, 31, 37, 41, 43, 47, 53, 59};
  const auto result = denum::gcd_lcm_all(primes);
  Count product = 1;
  for (const Int& p : primes) {
    product *= p;
  }
  CHECK(result.lcm == product);
  CHECK(result.gcd == 1);
  CHECK(result.lcm > Int("18446744073709551615"));
}

TEST_CASE("rising binomial on the spec points") {
  CHECK(denum::rising_binomial(1, 2) == 1);
  CHECK(denum::rising_binomial(0, 3) == 0);
  CHECK(denum::rising_binomial(5, 2) == 15);
  CHECK(denum::rising_binomial(-3, 4) == 0);
  CHECK(denum::rising_binomial(7, 0) == 1);   // empty product
  CHECK(denum::rising_binomial(0, 0) == 0);   // gate wins over empty product
  CHECK(denum::rising_binomial(-1, 0) == 0);
}

TEST_CASE("rising binomial equals an independent Pascal triangle") {
  const auto triangle = pascal_triangle(40);
  for (long k = 1; k <= 25; ++k) {
    for (unsigned long l = 0; l <= 8; ++l) {
      const std::size_t row = static_cast<std::size_t>(k) + l - 1;
      CHECK(denum::rising_binomial(k, l) == triangle[row][l]);
    }
  }
}

TEST_CASE("rising factorial is exactly divisible by l!") {
  for (long k = 1; k <= 20; ++k) {
    for (unsigned long l = 0; l <= 8; ++l) {
      Count product = 1;
      for (unsigned long j = 0; j < l; ++j) {
        product *= Int(k) + static_cast<unsigned long>(j);
      }
      Int factorial;
      mpz_fac_ui(factorial.get_mpz_t(), l);
      CHECK(product % factorial == 0);
      CHECK(denum::rising_binomial(k, l) * factorial == product);
    }
  }
}

TEST_CASE("stars and bars on the spec points") {
  CHECK(denum::stars_and_bars(0, 3) == 1);
  CHECK(denum::stars_and_bars(4, 3) == enumerate_compositions(4, 3));
  CHECK(denum::stars_and_bars(4, 3) == 15);
  CHECK(denum::stars_and_bars(2, 2) == enumerate_compositions(2, 2));
  CHECK(denum::stars_and_bars(2, 2) == 3);
  CHECK(denum::stars_and_bars(-1, 2) == 0);
  CHECK_THROWS_AS(denum::stars_and_bars(3, 0), denum::InvalidInputError);
}

TEST_CASE("stars and bars agrees with brute-force enumeration") {
  for (long m = 0; m <= 30; ++m) {
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(denum::stars_and_bars(m, n) == enumerate_compositions(m, n));
    }
  }
}

TEST_CASE("stars and bars reduces to the rising binomial") {
  for (long m = 0; m <= 30; ++m) {
    for (unsigned long n = 1; n <= 5; ++n) {
      CHECK(denum::stars_and_bars(m, n) ==
            denum::rising_binomial(Int(m) + 1, n - 1));
    }
  }
}

TEST_CASE("strict decimal parsing") {
  CHECK(denum::parse_unsigned_decimal("123") == 123);
  CHECK(denum::parse_unsigned_decimal("0") == 0);
  CHECK(denum::parse_unsigned_decimal("007") == 7);
  CHECK(denum::parse_unsigned_decimal("1000000000000000000000000000000") ==
        Int("1000000000000000000000000000000"));
  CHECK_THROWS_AS(denum::parse_unsigned_decimal(""),
                  denum::InvalidInputError);
  CHECK_THROWS_AS(denum::parse_unsigned_decimal("12a"),
                  denum::InvalidInputError);
  CHECK_THROWS_AS(denum::parse_unsigned_decimal("-5"),
                  denum::InvalidInputError);
  CHECK_THROWS_AS(denum::parse_unsigned_decimal(" 5"),
                  denum::InvalidInputError);
}
