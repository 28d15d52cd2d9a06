#pragma once

#include <vector>

#include "qpf/linalg/types.hpp"

namespace qpf {

// n^k with overflow checking.
Index ipow(Index n, int k);

/// Positive braid word (generator positions, 0-based, in application order)
/// lifting the permutation that moves an a-block of strands past the
/// following b-block: x_1..x_a y_1..y_b -> y_1..y_b x_1..x_a.
/// For a = b = 2 this is [1, 0, 2, 1].
std::vector<int> block_swap_word(int a, int b);

/// Applies 1 ⊗ R ⊗ 1 at strand positions (pos, pos + 1) to a vector of
/// k^M ⊗ V^{⊗strands}, V of dimension n. The multiplicity M is implicit in
/// the leading index digits.
template <class F>
SparseVec<F> apply_local(const SpMat<F>& R, Index n, int strands, int pos, const SparseVec<F>& x);

template <class F>
SparseVec<F> apply_word(const SpMat<F>& R, Index n, int strands, const std::vector<int>& word, SparseVec<F> x);

/// Matrix of the word acting on k^mult ⊗ V^{⊗strands}.
template <class F>
SpMat<F> word_matrix(const SpMat<F>& R, Index n, int strands, const std::vector<int>& word, Index mult = 1);

// (Ma ⊗ Mb) x, where x lives in a space of dimension Ma.cols() * Mb.cols().
template <class F>
SparseVec<F> apply_kron(const SpMat<F>& ma, const SpMat<F>& mb, const SparseVec<F>& x);
// (Ma ⊗ 1) x and (1 ⊗ Mb) x with the other factor of dimension nb / na.
template <class F>
SparseVec<F> apply_left(const SpMat<F>& ma, Index nb, const SparseVec<F>& x);
template <class F>
SparseVec<F> apply_right(Index na, const SpMat<F>& mb, const SparseVec<F>& x);

}  // namespace qpf
