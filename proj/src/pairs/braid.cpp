#include "qpf/pairs/braid.hpp"

#include <limits>

#include "qpf/scalar.hpp"

namespace qpf {

Index ipow(Index n, int k) {
  if (k < 0) throw DimensionMismatch("ipow: negative exponent");
  Index r = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && r > std::numeric_limits<int>::max() / n) throw DimensionMismatch("tensor power too large");
    r *= n;
  }
  return r;
}

std::vector<int> block_swap_word(int a, int b) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  // y_k travels from position a + k down to position k.
  for (int k = 0; k < b; ++k)
    for (int p = a + k - 1; p >= k; --p) w.push_back(p);
  return w;
}

template <class F>
SparseVec<F> apply_local(const SpMat<F>& R, Index n, int strands, int pos, const SparseVec<F>& x) {
  if (pos < 0 || pos + 2 > strands) throw DimensionMismatch("apply_local: position out of range");
  const Index lo = ipow(n, strands - pos - 2);
  const Index n2 = n * n;
  SparseAccumulator<F> acc;
  acc.reserve(x.nnz() * 2);
  for (const auto& [idx, v] : x.e) {
    const Index low = idx % lo;
    const Index t = idx / lo;
    const Index mid = t % n2;
    const Index hi = t / n2;
    for (typename SpMat<F>::InnerIterator it(R, mid); it; ++it)
      acc.add((hi * n2 + it.row()) * lo + low, it.value() * v);
  }
  return acc.finish();
}

template <class F>
SparseVec<F> apply_word(const SpMat<F>& R, Index n, int strands, const std::vector<int>& word, SparseVec<F> x) {
  for (int p : word) x = apply_local(R, n, strands, p, x);
  return x;
}

template <class F>
SpMat<F> word_matrix(const SpMat<F>& R, Index n, int strands, const std::vector<int>& word, Index mult) {
  const Index dim = mult * ipow(n, strands);
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(dim));
  for (Index j = 0; j < dim; ++j)
    cols[static_cast<std::size_t>(j)] = apply_word(R, n, strands, word, SparseVec<F>::unit(j));
  return from_columns(dim, cols);
}

template <class F>
SparseVec<F> apply_kron(const SpMat<F>& ma, const SpMat<F>& mb, const SparseVec<F>& x) {
  const Index nb = mb.cols(), rb = mb.rows();
  SparseAccumulator<F> acc;
  for (const auto& [idx, v] : x.e) {
    const Index i = idx / nb, j = idx % nb;
    for (typename SpMat<F>::InnerIterator a(ma, i); a; ++a) {
      const F av = a.value() * v;
      for (typename SpMat<F>::InnerIterator b(mb, j); b; ++b) acc.add(a.row() * rb + b.row(), av * b.value());
    }
  }
  return acc.finish();
}

template <class F>
SparseVec<F> apply_left(const SpMat<F>& ma, Index nb, const SparseVec<F>& x) {
  SparseAccumulator<F> acc;
  for (const auto& [idx, v] : x.e) {
    const Index i = idx / nb, j = idx % nb;
    for (typename SpMat<F>::InnerIterator a(ma, i); a; ++a) acc.add(a.row() * nb + j, a.value() * v);
  }
  return acc.finish();
}

template <class F>
SparseVec<F> apply_right(Index na, const SpMat<F>& mb, const SparseVec<F>& x) {
  (void)na;
  const Index nb = mb.cols(), rb = mb.rows();
  SparseAccumulator<F> acc;
  for (const auto& [idx, v] : x.e) {
    const Index i = idx / nb, j = idx % nb;
    for (typename SpMat<F>::InnerIterator b(mb, j); b; ++b) acc.add(i * rb + b.row(), b.value() * v);
  }
  return acc.finish();
}

#define QPF_INSTANTIATE(F)                                                                                  \
  template SparseVec<F> apply_local<F>(const SpMat<F>&, Index, int, int, const SparseVec<F>&);             \
  template SparseVec<F> apply_word<F>(const SpMat<F>&, Index, int, const std::vector<int>&, SparseVec<F>); \
  template SpMat<F> word_matrix<F>(const SpMat<F>&, Index, int, const std::vector<int>&, Index);           \
  template SparseVec<F> apply_kron<F>(const SpMat<F>&, const SpMat<F>&, const SparseVec<F>&);              \
  template SparseVec<F> apply_left<F>(const SpMat<F>&, Index, const SparseVec<F>&);                        \
  template SparseVec<F> apply_right<F>(Index, const SpMat<F>&, const SparseVec<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
