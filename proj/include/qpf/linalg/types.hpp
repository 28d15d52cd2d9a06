#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <algorithm>
#include <utility>
#include <vector>

#include "qpf/errors.hpp"
#include "qpf/scalar/eigen_support.hpp"

namespace qpf {

using Index = Eigen::Index;

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;
// Operators (R-matrices, braid generators) are stored sparse; results handed
// to callers as Mat are converted with to_dense.
template <class F>
using SpMat = Eigen::SparseMatrix<F, Eigen::ColMajor, int>;

/// Sparse vector: entries sorted by index, no explicit zeros.
template <class F>
struct SparseVec {
  std::vector<std::pair<Index, F>> e;

  bool empty() const { return e.empty(); }
  std::size_t nnz() const { return e.size(); }
  Index lead() const { return e.front().first; }
  const F* find(Index i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i,
                               [](const std::pair<Index, F>& a, Index b) { return a.first < b; });
    return (it != e.end() && it->first == i) ? &it->second : nullptr;
  }
  F at(Index i) const {
    const F* p = find(i);
    return p ? *p : F(0);
  }
  SparseVec scaled(const F& c) const {
    SparseVec r;
    if (c.is_zero()) return r;
    r.e.reserve(e.size());
    for (const auto& [i, v] : e) r.e.emplace_back(i, v * c);
    return r;
  }
  static SparseVec unit(Index i) {
    SparseVec r;
    r.e.emplace_back(i, F(1));
    return r;
  }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e == b.e; }
};

/// Collects (index, value) contributions and merges them into a SparseVec.
template <class F>
class SparseAccumulator {
 public:
  void reserve(std::size_t n) { buf_.reserve(n); }
  void add(Index i, F v) {
    if (!v.is_zero()) buf_.emplace_back(i, std::move(v));
  }
  void add_scaled(const SparseVec<F>& x, const F& c) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : x.e) add(i, v * c);
  }
  void add(const SparseVec<F>& x) {
    for (const auto& [i, v] : x.e) buf_.emplace_back(i, v);
  }
  SparseVec<F> finish() {
    std::stable_sort(buf_.begin(), buf_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<F> r;
    r.e.reserve(buf_.size());
    for (std::size_t k = 0; k < buf_.size();) {
      Index i = buf_[k].first;
      F s = std::move(buf_[k].second);
      for (++k; k < buf_.size() && buf_[k].first == i; ++k) s += buf_[k].second;
      if (!s.is_zero()) r.e.emplace_back(i, std::move(s));
    }
    buf_.clear();
    return r;
  }

 private:
  std::vector<std::pair<Index, F>> buf_;
};

template <class F>
SparseVec<F> operator+(const SparseVec<F>& a, const SparseVec<F>& b) {
  SparseAccumulator<F> acc;
  acc.add(a);
  acc.add(b);
  return acc.finish();
}

template <class F>
SparseVec<F> operator-(const SparseVec<F>& a, const SparseVec<F>& b) {
  SparseAccumulator<F> acc;
  acc.add(a);
  acc.add_scaled(b, F(-1));
  return acc.finish();
}

// Kronecker product x ⊗ y where y lives in a space of dimension ny.
template <class F>
SparseVec<F> kron(const SparseVec<F>& x, const SparseVec<F>& y, Index ny) {
  SparseVec<F> r;
  r.e.reserve(x.nnz() * y.nnz());
  for (const auto& [i, a] : x.e)
    for (const auto& [j, b] : y.e) r.e.emplace_back(i * ny + j, a * b);
  return r;
}

template <class F>
SparseVec<F> column(const SpMat<F>& m, Index j) {
  SparseVec<F> r;
  for (typename SpMat<F>::InnerIterator it(m, j); it; ++it)
    if (!it.value().is_zero()) r.e.emplace_back(it.row(), it.value());
  return r;
}

template <class F>
SparseVec<F> apply(const SpMat<F>& m, const SparseVec<F>& x) {
  SparseAccumulator<F> acc;
  for (const auto& [j, v] : x.e)
    for (typename SpMat<F>::InnerIterator it(m, j); it; ++it) acc.add(it.row(), it.value() * v);
  return acc.finish();
}

template <class F>
SpMat<F> from_columns(Index rows, const std::vector<SparseVec<F>>& cols) {
  SpMat<F> m(rows, static_cast<Index>(cols.size()));
  std::vector<int> nnz(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) nnz[j] = static_cast<int>(cols[j].nnz());
  m.reserve(nnz);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j].e) m.insert(i, static_cast<Index>(j)) = v;
  m.makeCompressed();
  return m;
}

template <class F>
std::vector<SparseVec<F>> columns_of(const SpMat<F>& m) {
  std::vector<SparseVec<F>> r(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) r[static_cast<std::size_t>(j)] = column(m, j);
  return r;
}

template <class F>
std::vector<SparseVec<F>> rows_of(const SpMat<F>& m) {
  SpMat<F> t = m.transpose();
  return columns_of(t);
}

template <class F>
SpMat<F> identity(Index n) {
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = SparseVec<F>::unit(j);
  return from_columns(n, cols);
}

template <class F>
SpMat<F> scalar_matrix(Index n, const F& c) {
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = SparseVec<F>::unit(j).scaled(c);
  return from_columns(n, cols);
}

template <class F>
SpMat<F> mul(const SpMat<F>& a, const SpMat<F>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mul: inner dimensions differ");
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(b.cols()));
  for (Index j = 0; j < b.cols(); ++j) cols[static_cast<std::size_t>(j)] = apply(a, column(b, j));
  return from_columns(a.rows(), cols);
}

template <class F>
SpMat<F> add(const SpMat<F>& a, const SpMat<F>& b, const F& cb = F(1)) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: shapes differ");
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(a.cols()));
  for (Index j = 0; j < a.cols(); ++j) {
    SparseAccumulator<F> acc;
    acc.add(column(a, j));
    acc.add_scaled(column(b, j), cb);
    cols[static_cast<std::size_t>(j)] = acc.finish();
  }
  return from_columns(a.rows(), cols);
}

template <class F>
SpMat<F> sub(const SpMat<F>& a, const SpMat<F>& b) {
  return add(a, b, F(-1));
}

template <class F>
SpMat<F> scale(const SpMat<F>& a, const F& c) {
  std::vector<SparseVec<F>> cols = columns_of(a);
  for (auto& col : cols) col = col.scaled(c);
  return from_columns(a.rows(), cols);
}

template <class F>
SpMat<F> kron(const SpMat<F>& a, const SpMat<F>& b) {
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(a.cols() * b.cols()));
  for (Index i = 0; i < a.cols(); ++i) {
    SparseVec<F> ca = column(a, i);
    for (Index j = 0; j < b.cols(); ++j)
      cols[static_cast<std::size_t>(i * b.cols() + j)] = kron(ca, column(b, j), b.rows());
  }
  return from_columns(a.rows() * b.rows(), cols);
}

template <class F>
bool is_zero(const SpMat<F>& a) {
  for (Index j = 0; j < a.outerSize(); ++j)
    for (typename SpMat<F>::InnerIterator it(a, j); it; ++it)
      if (!it.value().is_zero()) return false;
  return true;
}

template <class F>
bool equal(const SpMat<F>& a, const SpMat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    if (!(column(a, j) == column(b, j))) return false;
  return true;
}

template <class F>
Index nonzeros(const SpMat<F>& a) {
  Index n = 0;
  for (Index j = 0; j < a.outerSize(); ++j)
    for (typename SpMat<F>::InnerIterator it(a, j); it; ++it)
      if (!it.value().is_zero()) ++n;
  return n;
}

template <class F>
Mat<F> to_dense(const SpMat<F>& a) {
  Mat<F> m = Mat<F>::Constant(a.rows(), a.cols(), F(0));
  for (Index j = 0; j < a.outerSize(); ++j)
    for (typename SpMat<F>::InnerIterator it(a, j); it; ++it) m(it.row(), j) = it.value();
  return m;
}

template <class F>
SpMat<F> to_sparse(const Mat<F>& m) {
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) cols[static_cast<std::size_t>(j)].e.emplace_back(i, m(i, j));
  return from_columns(m.rows(), cols);
}

template <class F>
SparseVec<F> to_sparse_vec(const Vec<F>& v) {
  SparseVec<F> r;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) r.e.emplace_back(i, v(i));
  return r;
}

template <class F>
Vec<F> to_dense_vec(const SparseVec<F>& v, Index n) {
  Vec<F> r = Vec<F>::Constant(n, F(0));
  for (const auto& [i, x] : v.e) r(i) = x;
  return r;
}

// Row-major flattening of a matrix, index i * cols + j.
template <class F>
SparseVec<F> flatten(const SpMat<F>& a) {
  SparseAccumulator<F> acc;
  for (Index j = 0; j < a.outerSize(); ++j)
    for (typename SpMat<F>::InnerIterator it(a, j); it; ++it) acc.add(it.row() * a.cols() + j, it.value());
  return acc.finish();
}

template <class F>
SpMat<F> unflatten(const SparseVec<F>& v, Index rows, Index cols) {
  std::vector<SparseVec<F>> c(static_cast<std::size_t>(cols));
  for (const auto& [k, x] : v.e) c[static_cast<std::size_t>(k % cols)].e.emplace_back(k / cols, x);
  return from_columns(rows, c);
}

}  // namespace qpf
