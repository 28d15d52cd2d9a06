#include "qpf/linalg/closure.hpp"

#include <deque>

#include "qpf/linalg/echelon.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
AlgebraClosure<F> algebra_closure(const std::vector<SpMat<F>>& gens, Index n) {
  if (!gens.empty()) n = gens.front().rows();
  if (n < 0) throw DimensionMismatch("algebra_closure: size unknown for an empty generator list");
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("algebra_closure: generators must be n x n");

  RowEchelon<F> span(n * n);
  std::deque<SpMat<F>> pending;
  auto offer = [&](SpMat<F> m) {
    if (span.insert(flatten(m))) pending.push_back(std::move(m));
  };
  offer(identity<F>(n));
  for (const auto& g : gens) offer(g);
  while (!pending.empty()) {
    SpMat<F> b = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : gens) offer(mul(b, g));
  }
  AlgebraClosure<F> out;
  out.dim = span.rank();
  for (const auto& r : span.rows()) out.basis.push_back(unflatten(r, n, n));
  return out;
}

template <class F>
std::pair<Index, std::vector<Mat<F>>> algebra_closure(const std::vector<Mat<F>>& gens, Index n) {
  std::vector<SpMat<F>> sp;
  for (const auto& g : gens) sp.push_back(to_sparse(g));
  AlgebraClosure<F> c = algebra_closure(sp, gens.empty() ? n : gens.front().rows());
  std::vector<Mat<F>> basis;
  for (const auto& b : c.basis) basis.push_back(to_dense(b));
  return {c.dim, std::move(basis)};
}

#define QPF_INSTANTIATE(F)                                                               \
  template AlgebraClosure<F> algebra_closure<F>(const std::vector<SpMat<F>>&, Index);   \
  template std::pair<Index, std::vector<Mat<F>>> algebra_closure<F>(const std::vector<Mat<F>>&, Index);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
