#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qpf/commutant/braid_rep.hpp"
#include "qpf/linalg/echelon.hpp"

namespace qpf {

/// Basis of Hom_{B_d}(source^{⊗d}, target^{⊗d}). Elements are
/// target.dim^d x source.dim^d matrices; the basis is the RREF of their
/// row-major flattenings, so coordinates are read off at the pivots.
template <class F>
class HomSpaceBasis {
 public:
  HomSpaceBasis(HeckePair<F> source, HeckePair<F> target, int d, std::vector<SparseVec<F>> flat);

  const HeckePair<F>& source() const { return source_; }
  const HeckePair<F>& target() const { return target_; }
  int d() const { return d_; }
  Index dim() const { return static_cast<Index>(flat_.size()); }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  const std::vector<SparseVec<F>>& flat_basis() const { return flat_; }
  SpMat<F> element(Index k) const { return unflatten(flat_[static_cast<std::size_t>(k)], rows_, cols_); }
  std::vector<SpMat<F>> basis() const;

  bool contains(const SpMat<F>& x) const;
  std::optional<std::vector<F>> coordinates(const SpMat<F>& x) const;
  SpMat<F> combine(const std::vector<F>& coords) const;

 private:
  HeckePair<F> source_, target_;
  int d_;
  Index rows_, cols_;
  std::vector<SparseVec<F>> flat_;
  std::vector<Index> pivots_;
  RowEchelon<F> ech_;
};

/// Canonical basis of {X : X ρ_V(T_i) = ρ_W(T_i) X}, from one stacked
/// nullspace problem. Results are memoized process-wide by pair fingerprints.
/// Throws DegreeMismatch.
template <class F>
std::shared_ptr<const HomSpaceBasis<F>> hom_basis(const HeckePair<F>& V, const HeckePair<F>& W, int d);

void clear_hom_cache();
std::size_t hom_cache_size();

/// An intertwiner together with the Hom space it lives in.
template <class F>
struct HomElement {
  std::shared_ptr<const HomSpaceBasis<F>> space;
  SpMat<F> matrix;

  // Throws NotInCommutant if m is not in the space.
  static HomElement make(std::shared_ptr<const HomSpaceBasis<F>> space, SpMat<F> m);
  static HomElement identity(const HeckePair<F>& V, int d);
  std::vector<F> coordinates() const { return *space->coordinates(matrix); }
};

/// f ∘ g for f : W -> V and g : U -> W, expressed in hom_basis(U, V, d).
template <class F>
HomElement<F> schur_product(const HomElement<F>& f, const HomElement<F>& g);

/// dim A(W, V)_d = dim Hom(W,V)^{⊗d} − dim I_d, with I_d generated by the
/// quadratic relations R_V X − X R_W.
template <class F>
Index a_dim(const HeckePair<F>& V, const HeckePair<F>& W, int d);

}  // namespace qpf
