#include "qpf/linalg/echelon.hpp"

#include <map>
#include <numeric>

#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
SparseVec<F> RowEchelon<F>::reduce(const SparseVec<F>& v) const {
  if (rows_.empty()) return v;
  SparseAccumulator<F> acc;
  acc.reserve(v.nnz());
  for (const auto& [i, x] : v.e) {
    auto it = rows_.find(i);
    if (it == rows_.end()) {
      acc.add(i, x);
      continue;
    }
    const F neg = -x;
    for (const auto& [j, y] : it->second.e)
      if (j != i) acc.add(j, y * neg);
  }
  return acc.finish();
}

template <class F>
bool RowEchelon<F>::insert(const SparseVec<F>& v) {
  SparseVec<F> r = reduce(v);
  if (r.empty()) return false;
  const Index p = r.lead();
  if (!(r.e.front().second == F(1))) r = r.scaled(r.e.front().second.inverse());
  r.e.front().second = F(1);
  for (auto& [pp, row] : rows_) {
    const F* c = row.find(p);
    if (!c) continue;
    SparseAccumulator<F> acc;
    acc.add(row);
    acc.add_scaled(r, -*c);
    row = acc.finish();
  }
  rows_.emplace(p, std::move(r));
  return true;
}

template <class F>
std::vector<Index> RowEchelon<F>::pivots() const {
  std::vector<Index> p;
  p.reserve(rows_.size());
  for (const auto& kv : rows_) p.push_back(kv.first);
  return p;
}

template <class F>
std::vector<SparseVec<F>> RowEchelon<F>::rows() const {
  std::vector<SparseVec<F>> r;
  r.reserve(rows_.size());
  for (const auto& kv : rows_) r.push_back(kv.second);
  return r;
}

template <class F>
const SparseVec<F>* RowEchelon<F>::row(Index pivot) const {
  auto it = rows_.find(pivot);
  return it == rows_.end() ? nullptr : &it->second;
}

namespace {

struct Components {
  std::vector<Index> parent;
  explicit Components(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index(0));
  }
  Index find(Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[static_cast<std::size_t>(b)] = a;
    else
      parent[static_cast<std::size_t>(a)] = b;
  }
};

// Groups the nonzero rows by connected component; components ordered by their smallest column.
template <class F>
std::map<Index, std::vector<const SparseVec<F>*>> split_rows(const std::vector<SparseVec<F>>& rows,
                                                              Components& comp) {
  for (const auto& r : rows)
    for (std::size_t k = 1; k < r.e.size(); ++k) comp.unite(r.e[0].first, r.e[k].first);
  std::map<Index, std::vector<const SparseVec<F>*>> groups;
  for (const auto& r : rows)
    if (!r.empty()) groups[comp.find(r.lead())].push_back(&r);
  for (auto& [root, g] : groups)
    std::stable_sort(g.begin(), g.end(), [](const SparseVec<F>* a, const SparseVec<F>* b) { return a->nnz() < b->nnz(); });
  return groups;
}

// Pivot preference: units first, then short entries. Only the elimination
// order depends on it.
int complexity(const RatFunc& x) {
  const ZPoly& n = x.reduced_num();
  const bool unit = x.is_laurent() && n.degree() == 0 && abs(n.lc()) == 1;
  return unit ? 0 : 1 + n.degree() + x.denominator().degree();
}
int complexity(const Rational& x) {
  return static_cast<int>(mpz_sizeinbase(x.value().get_num_mpz_t(), 2) + mpz_sizeinbase(x.value().get_den_mpz_t(), 2));
}
int complexity(const Cyclotomic& x) { return static_cast<int>(x.coeffs().size()); }

// Forward elimination with free pivot choice. Stored row k vanishes at the
// pivots of rows 0..k-1, so one pass in insertion order reduces.
template <class F>
struct Forward {
  std::vector<SparseVec<F>> rows;
  std::vector<Index> pivot_col;
};

template <class F>
Forward<F> forward_eliminate(const std::vector<const SparseVec<F>*>& group) {
  Forward<F> out;
  auto& rows = out.rows;
  auto& pivot_col = out.pivot_col;
  for (const auto* src : group) {
    SparseVec<F> v = *src;
    for (std::size_t k = 0; k < rows.size() && !v.empty(); ++k) {
      const F* c = v.find(pivot_col[k]);
      if (!c) continue;
      const F f = -(*c) / *rows[k].find(pivot_col[k]);
      SparseAccumulator<F> acc;
      acc.add(v);
      acc.add_scaled(rows[k], f);
      v = acc.finish();
    }
    if (v.empty()) continue;
    std::size_t best = 0;
    int best_cost = complexity(v.e[0].second);
    for (std::size_t i = 1; i < v.e.size() && best_cost > 0; ++i) {
      const int c = complexity(v.e[i].second);
      if (c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    pivot_col.push_back(v.e[best].first);
    rows.push_back(std::move(v));
  }
  return out;
}

template <class F>
Index forward_rank(const std::vector<const SparseVec<F>*>& group) {
  return static_cast<Index>(forward_eliminate(group).rows.size());
}

// Kernel vector with x_f = 1 and the other free coordinates zero. Row k only
// involves its own pivot, later pivots and free columns, so solve backwards.
template <class F>
SparseVec<F> back_substitute(const Forward<F>& fw, Index f) {
  std::map<Index, F> x{{f, F(1)}};
  for (std::size_t k = fw.rows.size(); k-- > 0;) {
    const Index p = fw.pivot_col[k];
    F s(0);
    const F* lead = nullptr;
    for (const auto& [j, y] : fw.rows[k].e) {
      if (j == p) {
        lead = &y;
        continue;
      }
      auto it = x.find(j);
      if (it != x.end()) s += y * it->second;
    }
    if (!s.is_zero()) x.emplace(p, -s / *lead);
  }
  SparseVec<F> v;
  v.e.assign(x.begin(), x.end());
  return v;
}

}  // namespace

template <class F>
std::vector<SparseVec<F>> nullspace_rows(const std::vector<SparseVec<F>>& rows, Index ncols) {
  for (const auto& r : rows)
    if (!r.empty() && r.e.back().first >= ncols) throw DimensionMismatch("nullspace: row exceeds column count");
  Components comp(ncols);
  auto groups = split_rows(rows, comp);
  std::vector<bool> touched(static_cast<std::size_t>(ncols), false);
  for (const auto& r : rows)
    for (const auto& [j, x] : r.e) touched[static_cast<std::size_t>(j)] = true;

  std::vector<SparseVec<F>> result;
  for (Index j = 0; j < ncols; ++j)
    if (!touched[static_cast<std::size_t>(j)]) result.push_back(SparseVec<F>::unit(j));

  for (const auto& [root, group] : groups) {
    const Forward<F> fw = forward_eliminate<F>(group);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (Index p : fw.pivot_col) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<SparseVec<F>> nulls;
    for (Index j = 0; j < ncols; ++j) {
      if (!touched[static_cast<std::size_t>(j)] || is_pivot[static_cast<std::size_t>(j)]) continue;
      if (comp.find(j) != root) continue;
      nulls.push_back(back_substitute(fw, j));
    }
    RowEchelon<F> canon(ncols);
    for (const auto& v : nulls) canon.insert(v);
    for (auto& r : canon.rows()) result.push_back(std::move(r));
  }
  std::sort(result.begin(), result.end(), [](const SparseVec<F>& a, const SparseVec<F>& b) { return a.lead() < b.lead(); });
  return result;
}

template <class F>
Index rank_rows(const std::vector<SparseVec<F>>& rows, Index ncols) {
  Components comp(ncols);
  auto groups = split_rows(rows, comp);
  Index rank = 0;
  for (const auto& [root, group] : groups) rank += forward_rank<F>(group);
  return rank;
}

#define QPF_INSTANTIATE(F)                                                                  \
  template class RowEchelon<F>;                                                             \
  template std::vector<SparseVec<F>> nullspace_rows<F>(const std::vector<SparseVec<F>>&, Index); \
  template Index rank_rows<F>(const std::vector<SparseVec<F>>&, Index);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
