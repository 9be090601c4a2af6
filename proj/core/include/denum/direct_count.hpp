#pragma once

#include <optional>

#include "denum/equation.hpp"

namespace denum {

struct DirectOptions {
  /// Refuse instances whose term count (product of radices) exceeds this.
  /// The failure is a ResourceError advising the residue-table route.
  /// nullopt disables the check.
  std::optional<Count> budget = Count(100000000);  // 1e8 summands
};

/// Exact number of non-negative integer solutions of sum(a_i x_i) = b.
/// Pure in (spec, b); safe for concurrent calls.
Count count_eq_direct(const EquationSpec& spec, const Int& b,
                      const DirectOptions& options = {});

/// Exact number of non-negative integer solutions of sum(a_i x_i) <= b,
/// counted by appending a slack variable with coefficient 1 (radix M) and
/// running the equation path on n+1 variables. The budget check covers the
/// extra factor M.
Count count_leq_direct(const EquationSpec& spec, const Int& b,
                       const DirectOptions& options = {});

/// Reference evaluation: walks the tuples with lexicographic indices
/// [first_index, first_index + tuple_count) one cursor step at a time and
/// sums their contributions. No pruning, no grouping. Disjoint ranges sum
/// to the full-range result, which is bit-identical to count_eq_direct.
Count count_eq_enumerated(const EquationSpec& spec, const Int& b,
                          const Int& first_index, const Count& tuple_count);

}  // namespace denum
