#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qpf/linalg/echelon.hpp"
#include "qpf/linalg/types.hpp"

namespace qpf {

/// Subspace of F^n stored by its canonical RREF basis (pivot = first nonzero
/// coordinate). Two subspaces are equal iff their stored bases are equal.
template <class F>
class Subspace {
 public:
  Subspace() : Subspace(0) {}
  explicit Subspace(Index ambient);

  static Subspace span(Index ambient, const std::vector<SparseVec<F>>& vectors);
  static Subspace full(Index ambient);
  static Subspace from_columns(const Mat<F>& m);

  Index ambient_dim() const { return d_->ech.ncols(); }
  Index dim() const { return d_->ech.rank(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  // Canonical basis vectors in pivot order.
  const std::vector<SparseVec<F>>& basis_vectors() const { return d_->rows; }
  const std::vector<Index>& pivots() const { return d_->pivots; }
  // Basis as the columns of an ambient_dim x dim matrix.
  Mat<F> basis() const;
  const RowEchelon<F>& echelon() const { return d_->ech; }

  bool contains(const SparseVec<F>& v) const { return d_->ech.contains(v); }
  bool contains(const Subspace& other) const;
  // Coordinates in the canonical basis, or nullopt if v is not in the subspace.
  std::optional<std::vector<F>> coordinates(const SparseVec<F>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.d_->rows == b.d_->rows;
  }

 private:
  struct Data {
    RowEchelon<F> ech;
    std::vector<SparseVec<F>> rows;
    std::vector<Index> pivots;
  };
  explicit Subspace(RowEchelon<F> ech);
  std::shared_ptr<const Data> d_;
};

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b);
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b);
// {x : <x, v> = 0 for all v in a} using the coordinate pairing.
template <class F>
Subspace<F> annihilator(const Subspace<F>& a);
// a ⊗ b inside F^{na} ⊗ F^{nb}.
template <class F>
Subspace<F> kron(const Subspace<F>& a, const Subspace<F>& b);
// Image of the subspace under a linear map.
template <class F>
Subspace<F> image(const SpMat<F>& m, const Subspace<F>& a);

// Dense front ends.
template <class F>
Index rank(const Mat<F>& m);
template <class F>
Index rank(const SpMat<F>& m);
template <class F>
Subspace<F> nullspace(const Mat<F>& m);
template <class F>
Subspace<F> nullspace(const SpMat<F>& m);
template <class F>
Subspace<F> column_space(const Mat<F>& m);
template <class F>
Subspace<F> column_space(const SpMat<F>& m);
// Some X with m·X = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& m, const Mat<F>& b);

}  // namespace qpf
