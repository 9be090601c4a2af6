#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "denum/equation.hpp"

namespace denum {

struct TableBuildOptions {
  /// Refuse profiles and tables whose modulus exceeds this. Beyond it the
  /// direct formula or the DP oracle is the right tool, and the error says
  /// so. The profile array has n*M cells and the table M rows.
  Int modulus_cap = Int(10000000);  // 1e7
};

/// The bounded solution counts: counts()[c] is the number of digit tuples
/// with sum(a_j t_j) = c and 0 <= t_j <= d_j - 1. Stored densely on
/// [0, max_sum()] with max_sum() = n*M - sum(a_i); zero beyond.
class BoundedProfile {
 public:
  BoundedProfile(EquationSpec spec, std::vector<Count> counts);

  const EquationSpec& spec() const { return spec_; }
  const std::vector<Count>& counts() const { return counts_; }

  /// n*M - sum(a_i): the largest sum the bounded tuples reach.
  Int max_sum() const;

  /// counts()[c], or 0 outside the stored range.
  Count at(const Int& c) const;

  /// Number of values c with a nonzero count.
  std::size_t support_size() const;

 private:
  EquationSpec spec_;
  std::vector<Count> counts_;
};

/// Builds the profile with a bounded-coin dynamic program, one pass per
/// variable. Throws ResourceError when the modulus exceeds the cap.
BoundedProfile bounded_profile(const EquationSpec& spec,
                               const TableBuildOptions& options = {});

/// Per-residue coefficient rows: rows[r][i] is the profile value at
/// r + i*M for r in [0, M) and i in [0, n) (0-based storage of the
/// 1-based row index in the query formula). Immutable once built or
/// loaded; safe to share across any number of querying threads.
struct ResidueTable {
  std::vector<Int> coefficients;
  Int modulus;
  std::vector<std::vector<Count>> rows;

  std::size_t n() const { return coefficients.size(); }

  /// Structural invariants: positive coefficients dividing the modulus,
  /// exactly M rows of n non-negative entries, entry total equal to the
  /// product of radices. Throws ValidationError with the failing detail.
  void validate() const;
};

ResidueTable build_table(const EquationSpec& spec,
                         const TableBuildOptions& options = {});

/// Exact count of non-negative solutions of sum(a_i x_i) = b, answered in
/// n rising-binomial terms from the row for b mod M. b may be arbitrarily
/// large; both b mod M and floor(b / M) are exact Euclidean divisions.
Count query_table(const ResidueTable& table, const Int& b);

/// Writes the table as a single structured text document (entries as
/// decimal strings). Deterministic: identical tables produce identical
/// bytes.
void save_table(const ResidueTable& table, std::ostream& out);
void save_table(const ResidueTable& table, const std::filesystem::path& path);

/// Parses and fully validates a table. Throws ParseError with field
/// context on malformed input, ValidationError on invariant breaches,
/// IoError when the file cannot be read.
ResidueTable load_table(std::istream& in);
ResidueTable load_table(const std::filesystem::path& path);

}  // namespace denum
