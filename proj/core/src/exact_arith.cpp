#include "denum/exact_arith.hpp"

#include <cctype>
#include <stdexcept>

#include "denum/errors.hpp"

namespace denum {

GcdLcm gcd_lcm_all(std::span<const Int> values) {
  if (values.empty()) {
    throw InvalidInputError("gcd_lcm_all: empty coefficient list");
  }
  GcdLcm result{values[0], values[0]};
  for (const Int& v : values) {
    if (v < 1) {
      throw InvalidInputError("gcd_lcm_all: entries must be positive, got " +
                              v.get_str());
    }
    mpz_gcd(result.gcd.get_mpz_t(), result.gcd.get_mpz_t(), v.get_mpz_t());
    mpz_lcm(result.lcm.get_mpz_t(), result.lcm.get_mpz_t(), v.get_mpz_t());
  }
  return result;
}

Count rising_binomial(const Int& k, unsigned long l) {
  if (k <= 0) {
    return 0;
  }
  Count product = 1;
  Int factor = k;
  for (unsigned long j = 0; j < l; ++j) {
    product *= factor;
    factor += 1;
  }
  Int factorial;
  mpz_fac_ui(factorial.get_mpz_t(), l);
  Count quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
              product.get_mpz_t(), factorial.get_mpz_t());
  if (remainder != 0) {
    // k(k+1)...(k+l-1) is always divisible by l!.
    throw std::logic_error("rising_binomial: non-zero remainder for k=" +
                           k.get_str() + " l=" + std::to_string(l));
  }
  return quotient;
}

Count stars_and_bars(const Int& m, unsigned long n) {
  if (n == 0) {
    throw InvalidInputError("stars_and_bars: n must be at least 1");
  }
  if (m < 0) {
    return 0;
  }
  if (n == 1) {
    return 1;
  }
  return rising_binomial(m + 1, n - 1);
}

Int parse_unsigned_decimal(const std::string& text) {
  if (text.empty()) {
    throw InvalidInputError("expected a decimal integer, got an empty string");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInputError("not a non-negative decimal integer: \"" + text +
                              "\"");
    }
  }
  return Int(text, 10);
}

}  // namespace denum
