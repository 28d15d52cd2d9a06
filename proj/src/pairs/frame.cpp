#include "qpf/pairs/frame.hpp"

#include <algorithm>

#include "qpf/pairs/braid.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

namespace {

template <class F>
SparseVec<F> shift(const SparseVec<F>& v, Index off) {
  SparseVec<F> r = v;
  for (auto& [i, x] : r.e) i += off;
  return r;
}

template <class F>
SparseVec<F> relabel_vec(const SparseVec<F>& v, const std::vector<Index>& perm) {
  SparseAccumulator<F> acc;
  for (const auto& [i, x] : v.e) acc.add(perm[static_cast<std::size_t>(i)], x);
  return acc.finish();
}

template <class F>
std::vector<SparseVec<F>> concat(std::vector<SparseVec<F>> a, const std::vector<SparseVec<F>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

template <class F>
std::shared_ptr<const typename QuotientFrame<F>::Data> QuotientFrame<F>::build(Subspace<F> sub, Subspace<F> quot,
                                                                               std::vector<SparseVec<F>> frame) {
  const Index n = sub.ambient_dim();
  if (quot.ambient_dim() != n) throw DimensionMismatch("quotient frame: ambient dimensions differ");
  if (!sub.contains(quot)) throw InvalidPair("quotient kernel is not contained in the subspace");
  if (static_cast<Index>(frame.size()) + quot.dim() != sub.dim())
    throw InvalidPair("frame size does not match dim(sub) - dim(quot)");
  auto d = std::make_shared<Data>();
  const Index w = static_cast<Index>(frame.size());
  d->trivial = quot.is_zero() && sub.is_full();
  for (Index a = 0; d->trivial && a < w; ++a)
    if (!(frame[static_cast<std::size_t>(a)] == SparseVec<F>::unit(a))) d->trivial = false;

  if (d->trivial) {
    d->coord = identity<F>(n);
    d->resid = SpMat<F>(n, n);
  } else {
    d->aug = RowEchelon<F>(n + w);
    for (const auto& v : quot.basis_vectors()) d->aug.insert(v);
    for (Index a = 0; a < w; ++a) {
      const auto& f = frame[static_cast<std::size_t>(a)];
      if (!sub.contains(f)) throw InvalidPair("frame vector outside the subspace");
      SparseVec<F> row = f;
      row.e.emplace_back(n + a, F(1));
      d->aug.insert(row);
    }
    for (Index p : d->aug.pivots())
      if (p >= n) throw InvalidPair("frame is not independent modulo the quotient kernel");
    std::vector<SparseVec<F>> cc(static_cast<std::size_t>(n)), rc(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      SparseVec<F> r = d->aug.reduce(SparseVec<F>::unit(i));
      SparseVec<F>& c = cc[static_cast<std::size_t>(i)];
      for (const auto& [k, x] : r.e)
        if (k >= n) c.e.emplace_back(k - n, -x);
      rc[static_cast<std::size_t>(i)] = sub.echelon().reduce(SparseVec<F>::unit(i));
    }
    d->coord = from_columns(w, cc);
    d->resid = from_columns(n, rc);
  }
  d->sub = std::move(sub);
  d->quot = std::move(quot);
  d->frame = std::move(frame);
  return d;
}

template <class F>
QuotientFrame<F> QuotientFrame<F>::trivial(Index n) {
  std::vector<SparseVec<F>> frame(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) frame[static_cast<std::size_t>(i)] = SparseVec<F>::unit(i);
  return QuotientFrame(build(Subspace<F>::full(n), Subspace<F>(n), std::move(frame)));
}

template <class F>
QuotientFrame<F> QuotientFrame<F>::canonical(const Subspace<F>& sub, const Subspace<F>& quot) {
  if (quot.ambient_dim() != sub.ambient_dim()) throw DimensionMismatch("quotient frame: ambient dimensions differ");
  if (!sub.contains(quot)) throw InvalidPair("quotient kernel is not contained in the subspace");
  RowEchelon<F> e(sub.ambient_dim());
  for (const auto& s : sub.basis_vectors()) e.insert(quot.echelon().reduce(s));
  return QuotientFrame(build(sub, quot, e.rows()));
}

template <class F>
QuotientFrame<F> QuotientFrame<F>::with_frame(const Subspace<F>& sub, const Subspace<F>& quot,
                                              std::vector<SparseVec<F>> frame) {
  return QuotientFrame(build(sub, quot, std::move(frame)));
}

template <class F>
std::optional<SparseVec<F>> QuotientFrame<F>::coordinates(const SparseVec<F>& x) const {
  if (d_->trivial) return x;
  const Index n = ambient_dim();
  SparseVec<F> r = d_->aug.reduce(x);
  SparseVec<F> c;
  for (const auto& [k, v] : r.e) {
    if (k < n) return std::nullopt;
    c.e.emplace_back(k - n, -v);
  }
  return c;
}

template <class F>
SparseVec<F> QuotientFrame<F>::lift(const SparseVec<F>& coords) const {
  if (d_->trivial) return coords;
  SparseAccumulator<F> acc;
  for (const auto& [a, c] : coords.e) acc.add_scaled(d_->frame[static_cast<std::size_t>(a)], c);
  return acc.finish();
}

template <class F>
const SpMat<F>& QuotientFrame<F>::coord_map() const {
  return d_->coord;
}

template <class F>
const SpMat<F>& QuotientFrame<F>::residual_map() const {
  return d_->resid;
}

template <class F>
QuotientFrame<F> tensor(const QuotientFrame<F>& a, const QuotientFrame<F>& b) {
  const Index na = a.ambient_dim(), nb = b.ambient_dim();
  if (a.is_trivial() && b.is_trivial()) return QuotientFrame<F>::trivial(na * nb);
  Subspace<F> sub = kron(a.sub(), b.sub());
  Subspace<F> quot = subspace_sum(kron(a.quot(), b.sub()), kron(a.sub(), b.quot()));
  std::vector<SparseVec<F>> frame;
  frame.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (const auto& f : a.frame())
    for (const auto& g : b.frame()) frame.push_back(kron(f, g, nb));
  return QuotientFrame<F>::with_frame(sub, quot, std::move(frame));
}

template <class F>
QuotientFrame<F> block_sum(const std::vector<QuotientFrame<F>>& parts) {
  Index n = 0;
  bool all_trivial = true;
  for (const auto& p : parts) {
    n += p.ambient_dim();
    all_trivial = all_trivial && p.is_trivial();
  }
  if (all_trivial) return QuotientFrame<F>::trivial(n);
  std::vector<SparseVec<F>> sub, quot, frame;
  Index off = 0;
  for (const auto& p : parts) {
    for (const auto& v : p.sub().basis_vectors()) sub.push_back(shift(v, off));
    for (const auto& v : p.quot().basis_vectors()) quot.push_back(shift(v, off));
    for (const auto& v : p.frame()) frame.push_back(shift(v, off));
    off += p.ambient_dim();
  }
  return QuotientFrame<F>::with_frame(Subspace<F>::span(n, sub), Subspace<F>::span(n, quot), std::move(frame));
}

template <class F>
QuotientFrame<F> relabel(const QuotientFrame<F>& qf, const std::vector<Index>& perm) {
  const Index n = qf.ambient_dim();
  if (static_cast<Index>(perm.size()) != n) throw DimensionMismatch("relabel: permutation size");
  bool identity_perm = true;
  for (Index i = 0; i < n; ++i) identity_perm = identity_perm && perm[static_cast<std::size_t>(i)] == i;
  if (identity_perm) return qf;
  std::vector<SparseVec<F>> sub, quot, frame;
  for (const auto& v : qf.sub().basis_vectors()) sub.push_back(relabel_vec(v, perm));
  for (const auto& v : qf.quot().basis_vectors()) quot.push_back(relabel_vec(v, perm));
  for (const auto& v : qf.frame()) frame.push_back(relabel_vec(v, perm));
  return QuotientFrame<F>::with_frame(Subspace<F>::span(n, sub), Subspace<F>::span(n, quot), std::move(frame));
}

template <class F>
std::optional<SparseVec<F>> tensor_coordinates(const QuotientFrame<F>& a, const QuotientFrame<F>& b,
                                               const SparseVec<F>& x) {
  const Index na = a.ambient_dim(), nb = b.ambient_dim();
  if (!a.is_trivial() && !apply_left(a.residual_map(), nb, x).empty()) return std::nullopt;
  if (!b.is_trivial() && !apply_right(na, b.residual_map(), x).empty()) return std::nullopt;
  if (a.is_trivial() && b.is_trivial()) return x;
  return apply_kron(a.coord_map(), b.coord_map(), x);
}

template <class F>
QuotientFrame<F> compose_frames(const QuotientFrame<F>& inner, const QuotientFrame<F>& outer) {
  if (outer.ambient_dim() != inner.dim()) throw DimensionMismatch("compose_frames: outer ambient is not the inner space");
  if (inner.is_trivial()) return outer;
  const Index n = inner.ambient_dim();
  std::vector<SparseVec<F>> sub, quot, frame;
  for (const auto& v : outer.sub().basis_vectors()) sub.push_back(inner.lift(v));
  for (const auto& v : outer.quot().basis_vectors()) quot.push_back(inner.lift(v));
  for (const auto& v : outer.frame()) frame.push_back(inner.lift(v));
  const auto& k = inner.quot().basis_vectors();
  return QuotientFrame<F>::with_frame(Subspace<F>::span(n, concat(sub, k)), Subspace<F>::span(n, concat(quot, k)),
                                      std::move(frame));
}

#define QPF_INSTANTIATE(F)                                                                                   \
  template class QuotientFrame<F>;                                                                          \
  template QuotientFrame<F> tensor<F>(const QuotientFrame<F>&, const QuotientFrame<F>&);                   \
  template QuotientFrame<F> block_sum<F>(const std::vector<QuotientFrame<F>>&);                            \
  template QuotientFrame<F> relabel<F>(const QuotientFrame<F>&, const std::vector<Index>&);                \
  template std::optional<SparseVec<F>> tensor_coordinates<F>(const QuotientFrame<F>&, const QuotientFrame<F>&, \
                                                             const SparseVec<F>&);                          \
  template QuotientFrame<F> compose_frames<F>(const QuotientFrame<F>&, const QuotientFrame<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
