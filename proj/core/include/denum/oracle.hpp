#pragma once

#include <span>

#include "denum/exact_arith.hpp"

namespace denum {

struct OracleOptions {
  /// The DP is O(n * b) in time and O(b) in space; refuse beyond this.
  Int value_cap = Int(1000000);  // 1e6
};

/// Ground truth by the classical unbounded-coin recurrence
/// (ways[c] += ways[c - a_i], coefficients processed one at a time).
/// Deliberately a different algorithmic family from every formula path;
/// shares nothing with them beyond the integer type.
Count count_dp(std::span<const Int> coefficients, const Int& b,
               const OracleOptions& options = {});

/// Solutions of sum(a_i x_i) <= b: one prefix-sum pass over the DP array.
Count count_leq_dp(std::span<const Int> coefficients, const Int& b,
                   const OracleOptions& options = {});

/// Solutions of sum(a_j t_j) = c with 0 <= t_j <= upper_bounds[j].
/// Literal capped DP, one t-loop per variable per cell.
Count count_bounded_dp(std::span<const Int> coefficients,
                       std::span<const Int> upper_bounds, const Int& c,
                       const OracleOptions& options = {});

}  // namespace denum
