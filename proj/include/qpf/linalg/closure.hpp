#pragma once

#include <vector>

#include "qpf/linalg/types.hpp"

namespace qpf {

template <class F>
struct AlgebraClosure {
  Index dim = 0;
  // Canonical basis: RREF of the row-major flattenings.
  std::vector<SpMat<F>> basis;
};

/// Unital algebra generated by gens (all n x n). Seeds with the identity and
/// the generators, then multiplies new basis elements by generators until
/// the span stops growing. n is only needed when gens is empty.
template <class F>
AlgebraClosure<F> algebra_closure(const std::vector<SpMat<F>>& gens, Index n = -1);

template <class F>
std::pair<Index, std::vector<Mat<F>>> algebra_closure(const std::vector<Mat<F>>& gens, Index n = -1);

}  // namespace qpf
