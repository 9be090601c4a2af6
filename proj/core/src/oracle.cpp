#include "denum/oracle.hpp"

#include <vector>

#include "denum/errors.hpp"

namespace denum {

namespace {

void check_coefficients(std::span<const Int> coefficients) {
  if (coefficients.empty()) {
    throw InvalidInputError("oracle: empty coefficient list");
  }
  for (const Int& a : coefficients) {
    if (a < 1) {
      throw InvalidInputError("oracle: coefficients must be positive, got " +
                              a.get_str());
    }
  }
}

std::size_t checked_value(const Int& value, const OracleOptions& options) {
  if (value < 0) {
    throw InvalidInputError("oracle: value must be non-negative, got " +
                            value.get_str());
  }
  if (value > options.value_cap) {
    throw ResourceError("oracle: value " + value.get_str() +
                        " exceeds the oracle cap of " +
                        options.value_cap.get_str());
  }
  if (!value.fits_ulong_p()) {
    throw ResourceError("oracle: value " + value.get_str() +
                        " does not fit in memory indices");
  }
  return static_cast<std::size_t>(value.get_ui());
}

std::vector<Count> unbounded_ways(std::span<const Int> coefficients,
                                  std::size_t b) {
  std::vector<Count> ways(b + 1, Count(0));
  ways[0] = 1;
  for (const Int& a : coefficients) {
    if (a > static_cast<unsigned long>(b)) {
      continue;
    }
    const std::size_t step = static_cast<std::size_t>(a.get_ui());
    for (std::size_t c = step; c <= b; ++c) {
      ways[c] += ways[c - step];
    }
  }
  return ways;
}

}  // namespace

Count count_dp(std::span<const Int> coefficients, const Int& b,
               const OracleOptions& options) {
  check_coefficients(coefficients);
  const std::size_t value = checked_value(b, options);
  return unbounded_ways(coefficients, value)[value];
}

Count count_leq_dp(std::span<const Int> coefficients, const Int& b,
                   const OracleOptions& options) {
  check_coefficients(coefficients);
  const std::size_t value = checked_value(b, options);
  const std::vector<Count> ways = unbounded_ways(coefficients, value);
  Count total = 0;
  for (const Count& w : ways) {
    total += w;
  }
  return total;
}

Count count_bounded_dp(std::span<const Int> coefficients,
                       std::span<const Int> upper_bounds, const Int& c,
                       const OracleOptions& options) {
  check_coefficients(coefficients);
  if (coefficients.size() != upper_bounds.size()) {
    throw InvalidInputError("oracle: coefficient and bound lists differ in "
                            "length");
  }
  for (const Int& bound : upper_bounds) {
    if (bound < 0) {
      throw InvalidInputError("oracle: bounds must be non-negative, got " +
                              bound.get_str());
    }
  }
  if (c < 0) {
    return 0;
  }
  const std::size_t value = checked_value(c, options);

  std::vector<Count> ways(value + 1, Count(0));
  std::vector<Count> next(value + 1, Count(0));
  ways[0] = 1;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const std::size_t step =
        coefficients[j] > static_cast<unsigned long>(value)
            ? value + 1
            : static_cast<std::size_t>(coefficients[j].get_ui());
    for (std::size_t s = 0; s <= value; ++s) {
      Count acc = 0;
      for (std::size_t t = 0;
           mpz_cmp_ui(upper_bounds[j].get_mpz_t(), t) >= 0 && t * step <= s;
           ++t) {
        acc += ways[s - t * step];
      }
      next[s] = acc;
    }
    ways.swap(next);
  }
  return ways[value];
}

}  // namespace denum
