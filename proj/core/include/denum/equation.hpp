#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "denum/exact_arith.hpp"

namespace denum {

/// A validated instance of sum(a_i x_i) = b: positive coefficients a_1..a_n,
/// a common multiple M of all of them (the lcm unless overridden) and the
/// radices d_i = M / a_i. Immutable after construction.
class EquationSpec {
 public:
  /// Throws InvalidInputError on an empty list, a non-positive coefficient,
  /// or an override that some coefficient does not divide (the message names
  /// the offending one).
  static EquationSpec make(std::vector<Int> coefficients,
                           std::optional<Int> modulus_override = std::nullopt);

  std::size_t n() const { return coefficients_.size(); }
  const std::vector<Int>& coefficients() const { return coefficients_; }
  const Int& modulus() const { return modulus_; }
  const std::vector<Int>& radices() const { return radices_; }

  /// Product of the radices: the number of summands the direct formula
  /// expands, independent of the right-hand side.
  Count term_count() const;

 private:
  EquationSpec() = default;

  std::vector<Int> coefficients_;
  Int modulus_;
  std::vector<Int> radices_;
};

/// Odometer over the digit box [0,d_1) x ... x [0,d_n). Digit 0 varies
/// fastest. Maintains sum(a_i t_i) incrementally, so one step costs O(1)
/// amortized. Single-owner mutable state; must not outlive its spec.
class MixedRadixCursor {
 public:
  /// Positioned at the all-zero tuple.
  explicit MixedRadixCursor(const EquationSpec& spec);

  /// Positioned at an arbitrary start tuple (each digit within its radix).
  MixedRadixCursor(const EquationSpec& spec, std::vector<Int> digits);

  /// Positioned at the tuple with the given lexicographic index, digit 0
  /// least significant. Enables range-partitioned enumeration: disjoint
  /// index ranges cover disjoint tuple sets.
  static MixedRadixCursor at_index(const EquationSpec& spec, const Int& index);

  bool exhausted() const { return exhausted_; }
  const std::vector<Int>& digits() const { return digits_; }
  const Int& running_sum() const { return running_sum_; }

  /// Steps to the lexicographic successor, or into the exhausted state
  /// after the final tuple. Throws std::logic_error if already exhausted.
  void advance();

 private:
  const EquationSpec* spec_;
  std::vector<Int> digits_;
  Int running_sum_;
  bool exhausted_ = false;
};

}  // namespace denum
