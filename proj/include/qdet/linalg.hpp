#pragma once

#include <utility>
#include <vector>

#include "qdet/scalar.hpp"

namespace qdet {

/// Sparse row over Q(q), terms sorted by column index, no zero entries.
struct SparseRow {
  std::vector<std::pair<int, RatFunc>> terms;

  bool empty() const { return terms.empty(); }
  int lead_col() const { return terms.front().first; }
  void sort_and_prune();
};

SparseRow row_sub_scaled(const SparseRow& a, const RatFunc& f,
                         const SparseRow& b);  // a - f*b

/// Incremental row-echelon basis: every stored row has leading coefficient 1
/// and a pivot column no other stored row leads with.  Reduction eliminates
/// every pivot-column occurrence, so remainders are supported on non-pivot
/// columns only and are unique.
class Echelon {
public:
  explicit Echelon(int ncols);

  /// Reduce against the basis; insert the nonzero remainder.  Returns true
  /// if the rank grew.
  bool insert(SparseRow row);

  /// Fully reduced remainder of `row`.
  SparseRow reduce(SparseRow row) const;

  /// Like reduce, recording the multiplier applied to each basis row:
  /// row = sum multipliers[r] * basis_row_r + remainder.
  SparseRow reduce_tracked(SparseRow row,
                           std::vector<std::pair<int, RatFunc>>* multipliers) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  bool has_pivot(int col) const { return row_of_pivot_[static_cast<size_t>(col)] >= 0; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const SparseRow& row(int r) const { return rows_[static_cast<size_t>(r)]; }

private:
  int ncols_;
  std::vector<SparseRow> rows_;
  std::vector<int> row_of_pivot_;  // column -> row index, or -1
};

}  // namespace qdet
