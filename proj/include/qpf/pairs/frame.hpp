#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qpf/linalg/echelon.hpp"
#include "qpf/linalg/subspace.hpp"
#include "qpf/linalg/types.hpp"

namespace qpf {

/// A subquotient sub/quot of F^N together with a frame: vectors of sub whose
/// classes form a basis of the quotient. The frame fixes the basis in which
/// induced maps are written.
///
/// Besides coordinates, the frame exposes two ambient-wide linear maps used
/// to work factor by factor on tensor products:
///   coord_map    A : F^N -> F^w, agreeing with the coordinates on sub
///                    (so A kills quot);
///   residual_map P : F^N -> F^N with kernel exactly sub.
template <class F>
class QuotientFrame {
 public:
  QuotientFrame() : QuotientFrame(trivial(0)) {}

  // Whole space, zero quotient, standard basis.
  static QuotientFrame trivial(Index n);
  // Frame = RREF basis of sub reduced modulo quot; depends only on (sub, quot).
  static QuotientFrame canonical(const Subspace<F>& sub, const Subspace<F>& quot);
  // Throws InvalidPair if quot ⊄ sub or the frame is not a complement.
  static QuotientFrame with_frame(const Subspace<F>& sub, const Subspace<F>& quot,
                                  std::vector<SparseVec<F>> frame);

  Index ambient_dim() const { return d_->sub.ambient_dim(); }
  Index dim() const { return static_cast<Index>(d_->frame.size()); }
  bool is_trivial() const { return d_->trivial; }
  const Subspace<F>& sub() const { return d_->sub; }
  const Subspace<F>& quot() const { return d_->quot; }
  const std::vector<SparseVec<F>>& frame() const { return d_->frame; }

  // Coordinates of x modulo quot, or nullopt if x is not in sub.
  std::optional<SparseVec<F>> coordinates(const SparseVec<F>& x) const;
  SparseVec<F> lift(const SparseVec<F>& coords) const;

  const SpMat<F>& coord_map() const;
  const SpMat<F>& residual_map() const;

  // Same subquotient (the frames may differ).
  bool same_space(const QuotientFrame& o) const { return sub() == o.sub() && quot() == o.quot(); }
  // Same frame vectors, and the two coordinate maps agree on sub ∩ o.sub,
  // which the frame spans modulo a common kernel. Both then present one
  // space in one basis.
  bool equivalent(const QuotientFrame& o) const {
    if (frame() != o.frame()) return false;
    if (same_space(o)) return true;
    const Subspace<F> common = subspace_intersect(sub(), o.sub());
    const Subspace<F> k1 = subspace_intersect(common, quot());
    return k1 == subspace_intersect(common, o.quot()) && common.dim() == dim() + k1.dim();
  }
  friend bool operator==(const QuotientFrame& a, const QuotientFrame& b) {
    return a.same_space(b) && a.frame() == b.frame();
  }

 private:
  struct Data {
    Subspace<F> sub, quot;
    std::vector<SparseVec<F>> frame;
    bool trivial = false;
    RowEchelon<F> aug;  // rows (q | 0) and (f_a | e_a) in F^{N + w}
    SpMat<F> coord, resid;
  };
  explicit QuotientFrame(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> build(Subspace<F> sub, Subspace<F> quot, std::vector<SparseVec<F>> frame);
  std::shared_ptr<const Data> d_;
};

/// a ⊗ b in F^{Na} ⊗ F^{Nb}: sub_a ⊗ sub_b modulo quot_a ⊗ sub_b + sub_a ⊗ quot_b,
/// frame f_i ⊗ g_j with i major.
template <class F>
QuotientFrame<F> tensor(const QuotientFrame<F>& a, const QuotientFrame<F>& b);

/// Block sum inside F^{N_1} ⊕ ... ⊕ F^{N_k}; frames concatenated.
template <class F>
QuotientFrame<F> block_sum(const std::vector<QuotientFrame<F>>& parts);

/// Relabels ambient coordinates: index i becomes perm[i].
template <class F>
QuotientFrame<F> relabel(const QuotientFrame<F>& qf, const std::vector<Index>& perm);

/// Coordinates of x ∈ F^{Na} ⊗ F^{Nb} in the frame of a ⊗ b, or nullopt when
/// x is not in sub_a ⊗ sub_b. Works factorwise, never building tensor(a, b).
template <class F>
std::optional<SparseVec<F>> tensor_coordinates(const QuotientFrame<F>& a, const QuotientFrame<F>& b,
                                               const SparseVec<F>& x);

/// Composite subquotient: inner presents W inside F^N; outer is a subquotient
/// of W (in W's frame coordinates). The result lives in F^N.
template <class F>
QuotientFrame<F> compose_frames(const QuotientFrame<F>& inner, const QuotientFrame<F>& outer);

}  // namespace qpf
