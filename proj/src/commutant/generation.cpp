#include "qpf/commutant/generation.hpp"

#include <algorithm>

#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
bool generates(const HeckePair<F>& V, const HeckePair<F>& W, int d) {
  if (V.degree_e() != W.degree_e())
    throw DegreeMismatch("generates: degrees " + std::to_string(V.degree_e()) + " and " +
                         std::to_string(W.degree_e()) + " differ");
  const auto into = hom_basis(W, V, d);   // W^d -> V^d
  const auto back = hom_basis(V, W, d);   // V^d -> W^d
  const Index nw = ipow(W.dim(), d);
  const SparseVec<F> id = flatten(identity<F>(nw));
  if (into->dim() == 0 || back->dim() == 0) return false;
  const auto fs = into->basis();
  const auto gs = back->basis();
  RowEchelon<F> span(nw * nw);
  for (const auto& g : gs)
    for (const auto& f : fs)
      if (span.insert(flatten(mul(g, f))) && span.contains(id)) return true;
  return false;
}

template <class F>
JordanData<F> pair_jordan(const HeckePair<F>& p) {
  const int e = std::max(p.degree_e(), 1);
  return jordan_auto(p.R(), p.field(), 2 * e * e + 1);
}

template <class F>
bool jordan_factor_test(const HeckePair<F>& U, const HeckePair<F>& V) {
  if (!(U.field() == V.field())) throw FieldMismatch("jordan_factor_test: pairs over different fields");
  const JordanData<F> ju = pair_jordan(U), jv = pair_jordan(V);
  for (const auto& b : ju.blocks) {
    const JordanBlocks<F>* other = jv.find(b.eigenvalue);
    if (!other) return false;
    for (int s : b.sizes)
      if (std::find(other->sizes.begin(), other->sizes.end(), s) == other->sizes.end()) return false;
  }
  return true;
}

#define QPF_INSTANTIATE(F)                                                        \
  template bool generates<F>(const HeckePair<F>&, const HeckePair<F>&, int);      \
  template JordanData<F> pair_jordan<F>(const HeckePair<F>&);                     \
  template bool jordan_factor_test<F>(const HeckePair<F>&, const HeckePair<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
