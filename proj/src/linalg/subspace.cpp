#include "qpf/linalg/subspace.hpp"

#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
Subspace<F>::Subspace(Index ambient) : Subspace(RowEchelon<F>(ambient)) {}

template <class F>
Subspace<F>::Subspace(RowEchelon<F> ech) {
  auto d = std::make_shared<Data>();
  d->rows = ech.rows();
  d->pivots = ech.pivots();
  d->ech = std::move(ech);
  d_ = std::move(d);
}

template <class F>
Subspace<F> Subspace<F>::span(Index ambient, const std::vector<SparseVec<F>>& vectors) {
  RowEchelon<F> ech(ambient);
  for (const auto& v : vectors) {
    if (!v.empty() && v.e.back().first >= ambient) throw DimensionMismatch("Subspace::span: vector exceeds ambient");
    ech.insert(v);
  }
  return Subspace(std::move(ech));
}

template <class F>
Subspace<F> Subspace<F>::full(Index ambient) {
  std::vector<SparseVec<F>> units;
  units.reserve(static_cast<std::size_t>(ambient));
  for (Index i = 0; i < ambient; ++i) units.push_back(SparseVec<F>::unit(i));
  return span(ambient, units);
}

template <class F>
Subspace<F> Subspace<F>::from_columns(const Mat<F>& m) {
  std::vector<SparseVec<F>> cols;
  for (Index j = 0; j < m.cols(); ++j) cols.push_back(to_sparse_vec<F>(m.col(j)));
  return span(m.rows(), cols);
}

template <class F>
Mat<F> Subspace<F>::basis() const {
  Mat<F> m = Mat<F>::Constant(ambient_dim(), dim(), F(0));
  for (Index j = 0; j < dim(); ++j)
    for (const auto& [i, x] : d_->rows[static_cast<std::size_t>(j)].e) m(i, j) = x;
  return m;
}

template <class F>
bool Subspace<F>::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("Subspace::contains: ambient mismatch");
  for (const auto& v : other.basis_vectors())
    if (!contains(v)) return false;
  return true;
}

template <class F>
std::optional<std::vector<F>> Subspace<F>::coordinates(const SparseVec<F>& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<F> c;
  c.reserve(d_->pivots.size());
  for (Index p : d_->pivots) c.push_back(v.at(p));
  return c;
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient mismatch");
  if (b.is_zero() || a.is_full()) return a;
  if (a.is_zero() || b.is_full()) return b;
  std::vector<SparseVec<F>> v = a.basis_vectors();
  v.insert(v.end(), b.basis_vectors().begin(), b.basis_vectors().end());
  return Subspace<F>::span(a.ambient_dim(), v);
}

template <class F>
Subspace<F> annihilator(const Subspace<F>& a) {
  return Subspace<F>::span(a.ambient_dim(), nullspace_rows(a.basis_vectors(), a.ambient_dim()));
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_intersect: ambient mismatch");
  if (a.is_full() || b.is_zero()) return b;
  if (b.is_full() || a.is_zero()) return a;
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  std::vector<SparseVec<F>> eqs = nullspace_rows(a.basis_vectors(), a.ambient_dim());
  std::vector<SparseVec<F>> eb = nullspace_rows(b.basis_vectors(), b.ambient_dim());
  eqs.insert(eqs.end(), eb.begin(), eb.end());
  return Subspace<F>::span(a.ambient_dim(), nullspace_rows(eqs, a.ambient_dim()));
}

template <class F>
Subspace<F> kron(const Subspace<F>& a, const Subspace<F>& b) {
  std::vector<SparseVec<F>> v;
  v.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (const auto& x : a.basis_vectors())
    for (const auto& y : b.basis_vectors()) v.push_back(kron(x, y, b.ambient_dim()));
  return Subspace<F>::span(a.ambient_dim() * b.ambient_dim(), v);
}

template <class F>
Subspace<F> image(const SpMat<F>& m, const Subspace<F>& a) {
  if (m.cols() != a.ambient_dim()) throw DimensionMismatch("image: shape mismatch");
  std::vector<SparseVec<F>> v;
  for (const auto& x : a.basis_vectors()) v.push_back(apply(m, x));
  return Subspace<F>::span(m.rows(), v);
}

template <class F>
Index rank(const SpMat<F>& m) {
  return rank_rows(columns_of(m), m.rows());
}

template <class F>
Index rank(const Mat<F>& m) {
  return rank(to_sparse(m));
}

template <class F>
Subspace<F> nullspace(const SpMat<F>& m) {
  return Subspace<F>::span(m.cols(), nullspace_rows(rows_of(m), m.cols()));
}

template <class F>
Subspace<F> nullspace(const Mat<F>& m) {
  return nullspace(to_sparse(m));
}

template <class F>
Subspace<F> column_space(const SpMat<F>& m) {
  return Subspace<F>::span(m.rows(), columns_of(m));
}

template <class F>
Subspace<F> column_space(const Mat<F>& m) {
  return column_space(to_sparse(m));
}

template <class F>
std::optional<Mat<F>> solve(const Mat<F>& m, const Mat<F>& b) {
  if (m.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  const Index n = m.cols(), k = b.cols();
  RowEchelon<F> ech(n + k);
  for (Index i = 0; i < m.rows(); ++i) {
    SparseVec<F> r;
    for (Index j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) r.e.emplace_back(j, m(i, j));
    for (Index j = 0; j < k; ++j)
      if (!b(i, j).is_zero()) r.e.emplace_back(n + j, b(i, j));
    ech.insert(r);
  }
  Mat<F> x = Mat<F>::Constant(n, k, F(0));
  for (Index p : ech.pivots()) {
    if (p >= n) return std::nullopt;
    for (const auto& [j, v] : ech.row(p)->e)
      if (j >= n) x(p, j - n) = v;
  }
  return x;
}

#define QPF_INSTANTIATE(F)                                                   \
  template class Subspace<F>;                                                \
  template Subspace<F> subspace_sum<F>(const Subspace<F>&, const Subspace<F>&);       \
  template Subspace<F> subspace_intersect<F>(const Subspace<F>&, const Subspace<F>&); \
  template Subspace<F> annihilator<F>(const Subspace<F>&);                   \
  template Subspace<F> kron<F>(const Subspace<F>&, const Subspace<F>&);      \
  template Subspace<F> image<F>(const SpMat<F>&, const Subspace<F>&);        \
  template Index rank<F>(const Mat<F>&);                                     \
  template Index rank<F>(const SpMat<F>&);                                   \
  template Subspace<F> nullspace<F>(const Mat<F>&);                          \
  template Subspace<F> nullspace<F>(const SpMat<F>&);                        \
  template Subspace<F> column_space<F>(const Mat<F>&);                       \
  template Subspace<F> column_space<F>(const SpMat<F>&);                     \
  template std::optional<Mat<F>> solve<F>(const Mat<F>&, const Mat<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
