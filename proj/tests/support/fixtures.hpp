#pragma once

#include <random>

#include "qpf/linalg.hpp"
#include "qpf/scalar.hpp"

namespace qpf::testing {

// Standard R-matrix written out from its defining cases, independently of the library.
template <class F>
Mat<F> standard_R(int n, const F& q) {
  Mat<F> r = Mat<F>::Constant(n * n, n * n, F(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int col = i * n + j;
      if (i == j) {
        r(col, col) = q;
      } else {
        r(j * n + i, col) = F(1);
        if (i > j) r(col, col) = q - q.inverse();
      }
    }
  return r;
}

// Naive dense Gaussian elimination over Q; the independent rank oracle.
inline Index oracle_rank(std::vector<std::vector<mpq_class>> a) {
  Index rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[static_cast<std::size_t>(rank)]);
    auto& piv = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / piv[c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * piv[k];
    }
    ++rank;
  }
  return rank;
}

inline Mat<Rational> random_rational_matrix(std::mt19937& rng, Index rows, Index cols, int density_pct = 60) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  Mat<Rational> m = Mat<Rational>::Constant(rows, cols, Rational(0));
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (pct(rng) < density_pct) m(i, j) = Rational(val(rng));
  return m;
}

inline std::vector<std::vector<mpq_class>> to_mpq(const Mat<Rational>& m) {
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)].push_back(m(i, j).value());
  return a;
}

template <class F>
Mat<F> matmul(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> c = Mat<F>::Constant(a.rows(), b.cols(), F(0));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class F>
Mat<F> dense_identity(Index n) {
  Mat<F> m = Mat<F>::Constant(n, n, F(0));
  for (Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
Mat<F> dense_kron(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> c = Mat<F>::Constant(a.rows() * b.rows(), a.cols() * b.cols(), F(0));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

// 1^{⊗i} ⊗ R ⊗ 1^{⊗(d-i-2)} on d strands of an n-dimensional space, by Kronecker products.
template <class F>
Mat<F> dense_generator(const Mat<F>& r, Index n, int d, int i) {
  Index left = 1, right = 1;
  for (int k = 0; k < i; ++k) left *= n;
  for (int k = i + 2; k < d; ++k) right *= n;
  return dense_kron(dense_kron(dense_identity<F>(left), r), dense_identity<F>(right));
}

}  // namespace qpf::testing
