#include "denum/direct_count.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "denum/errors.hpp"

namespace denum {

namespace {

// Histogram (sum -> tuple count) of one block of variables, filled by
// depth-first descent over the digit box. Branches whose partial sum
// already exceeds cap are cut: their tuples contribute nothing.
std::map<Int, Count> block_histogram(const EquationSpec& spec,
                                     const std::vector<std::size_t>& vars,
                                     const Int& cap) {
  std::map<Int, Count> hist;
  auto descend = [&](auto&& self, std::size_t pos, const Int& sum) -> void {
    if (pos == vars.size()) {
      hist[sum] += 1;
      return;
    }
    const Int& a = spec.coefficients()[vars[pos]];
    const Int& d = spec.radices()[vars[pos]];
    Int s = sum;
    for (Int t = 0; t < d && s <= cap; t += 1) {
      self(self, pos + 1, s);
      s += a;
    }
  };
  descend(descend, 0, Int(0));
  return hist;
}

}  // namespace

Count count_eq_direct(const EquationSpec& spec, const Int& b,
                      const DirectOptions& options) {
  if (b < 0) {
    throw InvalidInputError("count: b must be non-negative, got " +
                            b.get_str());
  }
  const Count terms = spec.term_count();
  if (options.budget && terms > *options.budget) {
    throw ResourceError("count: the direct formula expands " +
                        terms.get_str() + " terms, over the budget of " +
                        options.budget->get_str() +
                        "; build a residue table (build-table) and query it "
                        "instead, or raise --budget");
  }

  // Two blocks with balanced radix products: a block's enumeration cost is
  // bounded by its product, so the grouped evaluation costs about the
  // square root of the full term count instead of the term count itself.
  std::vector<std::size_t> order(spec.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (spec.radices()[x] != spec.radices()[y]) {
      return spec.radices()[x] > spec.radices()[y];
    }
    return x < y;
  });
  std::vector<std::size_t> block_a;
  std::vector<std::size_t> block_b;
  Int prod_a = 1;
  Int prod_b = 1;
  for (std::size_t v : order) {
    if (prod_a <= prod_b) {
      block_a.push_back(v);
      prod_a *= spec.radices()[v];
    } else {
      block_b.push_back(v);
      prod_b *= spec.radices()[v];
    }
  }

  const auto hist_a = block_histogram(spec, block_a, b);
  const auto hist_b = block_histogram(spec, block_b, b);

  const Int& modulus = spec.modulus();
  Int b_prime;
  Int b_residue;
  mpz_fdiv_qr(b_prime.get_mpz_t(), b_residue.get_mpz_t(), b.get_mpz_t(),
              modulus.get_mpz_t());

  // Tuple sums congruent to b modulo M lie in [0, nM), so the quotient
  // index (sum - r) / M takes at most n values; precompute the summand
  // for each instead of re-deriving it per tuple class.
  const unsigned long poly_len = spec.n() - 1;
  std::vector<Count> term_for_index(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    Int k = b_prime + 1;
    k -= static_cast<unsigned long>(i);
    term_for_index[i] = rising_binomial(k, poly_len);
  }

  struct Entry {
    const Int* sum;
    std::size_t quotient;  // floor(sum / M)
    const Count* count;
  };
  std::map<Int, std::vector<Entry>> block_b_by_residue;
  for (const auto& [s, c] : hist_b) {
    Int quotient;
    Int residue;
    mpz_fdiv_qr(quotient.get_mpz_t(), residue.get_mpz_t(), s.get_mpz_t(),
                modulus.get_mpz_t());
    block_b_by_residue[residue].push_back(
        {&s, static_cast<std::size_t>(quotient.get_ui()), &c});
  }

  Count total = 0;
  for (const auto& [sum_a, count_a] : hist_a) {
    const Int rest = b - sum_a;  // >= 0: the histogram is capped at b
    Int rest_prime;
    Int rest_residue;
    mpz_fdiv_qr(rest_prime.get_mpz_t(), rest_residue.get_mpz_t(),
                rest.get_mpz_t(), modulus.get_mpz_t());
    const auto it = block_b_by_residue.find(rest_residue);
    if (it == block_b_by_residue.end()) {
      continue;
    }
    const std::size_t quotient_a =
        static_cast<std::size_t>(Int(b_prime - rest_prime).get_ui());
    for (const Entry& entry : it->second) {
      if (*entry.sum > rest) {
        break;  // f would be negative; the summand is 0 from here on
      }
      // index < n: sums congruent to b stay below nM. at() turns a breach
      // of that into an internal error instead of silent misindexing.
      total += count_a * (*entry.count) *
               term_for_index.at(quotient_a + entry.quotient);
    }
  }
  return total;
}

Count count_leq_direct(const EquationSpec& spec, const Int& b,
                       const DirectOptions& options) {
  if (b < 0) {
    throw InvalidInputError("count: b must be non-negative, got " +
                            b.get_str());
  }
  // The inequality counts exactly the solutions of the equation with one
  // slack variable of coefficient 1 appended; its radix is M.
  std::vector<Int> with_slack = spec.coefficients();
  with_slack.push_back(1);
  EquationSpec slack_spec =
      EquationSpec::make(std::move(with_slack), spec.modulus());
  return count_eq_direct(slack_spec, b, options);
}

Count count_eq_enumerated(const EquationSpec& spec, const Int& b,
                          const Int& first_index, const Count& tuple_count) {
  if (b < 0) {
    throw InvalidInputError("count: b must be non-negative, got " +
                            b.get_str());
  }
  if (first_index < 0 || tuple_count < 0 ||
      first_index + tuple_count > spec.term_count()) {
    throw InvalidInputError("enumeration range outside the term count");
  }
  if (tuple_count == 0) {
    return 0;
  }

  MixedRadixCursor cursor = MixedRadixCursor::at_index(spec, first_index);
  const Int& modulus = spec.modulus();
  const unsigned long poly_len = spec.n() - 1;
  Count total = 0;
  for (Count i = 0; i < tuple_count; i += 1) {
    if (i > 0) {
      cursor.advance();
    }
    const Int& s = cursor.running_sum();
    if (s <= b) {
      const Int rest = b - s;
      if (rest % modulus == 0) {
        total += rising_binomial(rest / modulus + 1, poly_len);
      }
    }
  }
  return total;
}

}  // namespace denum
