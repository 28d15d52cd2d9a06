#include "qpf/commutant/hom.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <typeinfo>

#include "qpf/linalg/subspace.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
HomSpaceBasis<F>::HomSpaceBasis(HeckePair<F> source, HeckePair<F> target, int d, std::vector<SparseVec<F>> flat)
    : source_(std::move(source)),
      target_(std::move(target)),
      d_(d),
      rows_(ipow(target_.dim(), d)),
      cols_(ipow(source_.dim(), d)),
      flat_(std::move(flat)),
      ech_(rows_ * cols_) {
  for (const auto& v : flat_) {
    pivots_.push_back(v.lead());
    ech_.insert(v);
  }
}

template <class F>
std::vector<SpMat<F>> HomSpaceBasis<F>::basis() const {
  std::vector<SpMat<F>> out;
  for (Index k = 0; k < dim(); ++k) out.push_back(element(k));
  return out;
}

template <class F>
bool HomSpaceBasis<F>::contains(const SpMat<F>& x) const {
  return x.rows() == rows_ && x.cols() == cols_ && ech_.contains(flatten(x));
}

template <class F>
std::optional<std::vector<F>> HomSpaceBasis<F>::coordinates(const SpMat<F>& x) const {
  if (!contains(x)) return std::nullopt;
  const SparseVec<F> v = flatten(x);
  std::vector<F> c;
  c.reserve(pivots_.size());
  for (Index p : pivots_) c.push_back(v.at(p));
  return c;
}

template <class F>
SpMat<F> HomSpaceBasis<F>::combine(const std::vector<F>& coords) const {
  if (static_cast<Index>(coords.size()) != dim()) throw DimensionMismatch("combine: wrong number of coordinates");
  SparseAccumulator<F> acc;
  for (std::size_t k = 0; k < coords.size(); ++k) acc.add_scaled(flat_[k], coords[k]);
  return unflatten(acc.finish(), rows_, cols_);
}

namespace {

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const void>> cache;

template <class F>
void require_compatible(const HeckePair<F>& V, const HeckePair<F>& W, const char* who, bool degrees = true) {
  if (!(V.field() == W.field())) throw FieldMismatch(std::string(who) + ": pairs over different fields");
  if (degrees && V.degree_e() != W.degree_e())
    throw DegreeMismatch(std::string(who) + ": degrees " + std::to_string(V.degree_e()) + " and " +
                         std::to_string(W.degree_e()) + " differ");
}

template <class F>
std::vector<SparseVec<F>> commutant_system(const HeckePair<F>& V, const HeckePair<F>& W, int d) {
  const BraidRep<F> rv = braid_rep(V, d), rw = braid_rep(W, d);
  const Index nv = rv.dim(), nw = rw.dim();
  std::vector<SparseVec<F>> rows;
  rows.reserve(static_cast<std::size_t>(std::max(d - 1, 0) * nv * nw));
  for (int i = 0; i + 1 < d; ++i) {
    const auto acols = columns_of(rv.gens[static_cast<std::size_t>(i)]);
    const auto brows = rows_of(rw.gens[static_cast<std::size_t>(i)]);
    // (X A − B X)_{r,c}, unknown X_{r,c} at r * nv + c.
    for (Index r = 0; r < nw; ++r)
      for (Index c = 0; c < nv; ++c) {
        SparseAccumulator<F> acc;
        for (const auto& [k, a] : acols[static_cast<std::size_t>(c)].e) acc.add(r * nv + k, a);
        for (const auto& [k, b] : brows[static_cast<std::size_t>(r)].e) acc.add(k * nv + c, -b);
        rows.push_back(acc.finish());
      }
  }
  return rows;
}

}  // namespace

template <class F>
std::shared_ptr<const HomSpaceBasis<F>> hom_basis(const HeckePair<F>& V, const HeckePair<F>& W, int d) {
  require_compatible(V, W, "hom_basis", false);
  if (d < 0) throw Error("hom_basis: d must be non-negative");
  const std::string key = std::string(typeid(F).name()) + "|" + V.fingerprint() + "|" + W.fingerprint() + "|" +
                          std::to_string(d);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      auto hit = std::static_pointer_cast<const HomSpaceBasis<F>>(it->second);
      if (hit->source().same_data(V) && hit->target().same_data(W)) return hit;
    }
  }
  const Index n = ipow(W.dim(), d) * ipow(V.dim(), d);
  std::vector<SparseVec<F>> flat = nullspace_rows(commutant_system(V, W, d), n);
  auto result = std::make_shared<const HomSpaceBasis<F>>(V, W, d, std::move(flat));
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, result);
  return result;
}

void clear_hom_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

std::size_t hom_cache_size() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.size();
}

template <class F>
HomElement<F> HomElement<F>::make(std::shared_ptr<const HomSpaceBasis<F>> space, SpMat<F> m) {
  if (!space->contains(m)) throw NotInCommutant("matrix does not commute with the braid actions");
  return {std::move(space), std::move(m)};
}

template <class F>
HomElement<F> HomElement<F>::identity(const HeckePair<F>& V, int d) {
  return make(hom_basis(V, V, d), qpf::identity<F>(ipow(V.dim(), d)));
}

template <class F>
HomElement<F> schur_product(const HomElement<F>& f, const HomElement<F>& g) {
  const auto& fs = *f.space;
  const auto& gs = *g.space;
  if (fs.d() != gs.d() || !fs.source().same_data(gs.target()))
    throw DimensionMismatch("schur_product: middle pairs or degrees differ");
  auto target = hom_basis(gs.source(), fs.target(), fs.d());
  SpMat<F> m = mul(f.matrix, g.matrix);
  if (!target->contains(m)) throw Error("schur_product: composite left the commutant");
  return {std::move(target), std::move(m)};
}

template <class F>
Index a_dim(const HeckePair<F>& V, const HeckePair<F>& W, int d) {
  require_compatible(V, W, "a_dim");
  const Index nv = V.dim(), nw = W.dim(), h = nv * nw;
  if (d < 0) throw Error("a_dim: negative degree");
  if (d == 0) return 1;
  if (d == 1) return h;
  // Hom(W,V)^{⊗d} coordinates: E_{i1 j1} ⊗ ... ⊗ E_{id jd} at digits (i_k nw + j_k) base h.
  auto pidx = [&](Index i1, Index i2, Index j1, Index j2) { return (i1 * nw + j1) * h + (i2 * nw + j2); };
  const auto rv = columns_of(V.R());
  const auto rw = rows_of(W.R());
  RowEchelon<F> rel(h * h);
  for (Index I = 0; I < nv * nv; ++I)
    for (Index J = 0; J < nw * nw; ++J) {
      // R_V E_{IJ} − E_{IJ} R_W
      SparseAccumulator<F> acc;
      for (const auto& [K, x] : rv[static_cast<std::size_t>(I)].e) acc.add(pidx(K / nv, K % nv, J / nw, J % nw), x);
      for (const auto& [L, x] : rw[static_cast<std::size_t>(J)].e) acc.add(pidx(I / nv, I % nv, L / nw, L % nw), -x);
      rel.insert(acc.finish());
    }
  const Index total = ipow(h, d);
  if (d == 2) return total - rel.rank();
  const auto relrows = rel.rows();
  std::vector<SparseVec<F>> gens;
  for (int a = 0; a + 2 <= d; ++a) {
    const Index left = ipow(h, a), right = ipow(h, d - 2 - a);
    for (Index l = 0; l < left; ++l)
      for (const auto& z : relrows)
        for (Index r = 0; r < right; ++r) {
          SparseVec<F> v;
          v.e.reserve(z.nnz());
          for (const auto& [k, x] : z.e) v.e.emplace_back((l * h * h + k) * right + r, x);
          gens.push_back(std::move(v));
        }
  }
  return total - rank_rows(gens, total);
}

#define QPF_INSTANTIATE(F)                                                                                   \
  template class HomSpaceBasis<F>;                                                                          \
  template std::shared_ptr<const HomSpaceBasis<F>> hom_basis<F>(const HeckePair<F>&, const HeckePair<F>&, int); \
  template struct HomElement<F>;                                                                            \
  template HomElement<F> schur_product<F>(const HomElement<F>&, const HomElement<F>&);                      \
  template Index a_dim<F>(const HeckePair<F>&, const HeckePair<F>&, int);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
