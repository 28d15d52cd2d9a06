#pragma once

#include <map>
#include <vector>

#include "qpf/linalg/types.hpp"

namespace qpf {

/// Incremental reduced row echelon form over an exact field.
///
/// The pivot of a row is its first nonzero column; every stored row has a 1
/// at its pivot and zeros at all other pivots, so the row set is the unique
/// RREF basis of the span.
template <class F>
class RowEchelon {
 public:
  explicit RowEchelon(Index ncols = 0) : ncols_(ncols) {}

  Index ncols() const { return ncols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  // Adds v to the span; returns true when the rank grew.
  bool insert(const SparseVec<F>& v);
  // v minus its projection onto the span along the pivot coordinates.
  SparseVec<F> reduce(const SparseVec<F>& v) const;
  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  std::vector<Index> pivots() const;
  std::vector<SparseVec<F>> rows() const;
  const SparseVec<F>* row(Index pivot) const;

 private:
  Index ncols_;
  std::map<Index, SparseVec<F>> rows_;
};

/// Canonical basis of the solution space {x : r·x = 0 for all rows r}.
/// Rows are split into connected components over shared columns first.
template <class F>
std::vector<SparseVec<F>> nullspace_rows(const std::vector<SparseVec<F>>& rows, Index ncols);

template <class F>
Index rank_rows(const std::vector<SparseVec<F>>& rows, Index ncols);

}  // namespace qpf
