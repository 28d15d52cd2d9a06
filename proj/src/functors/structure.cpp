#include "qpf/functors/structure.hpp"

#include "qpf/commutant/generation.hpp"
#include "qpf/pairs/braid.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
SpMat<F> braiding(const FunctorExpr& f, const FunctorExpr& g, const HeckePair<F>& V) {
  if (!f.composable() || !g.composable()) throw Unsupported("braiding: repdiv values carry no braiding");
  const EvalResult<F> a = eval_obj(f, V), b = eval_obj(g, V);
  const int A = a.degree(), B = b.degree();
  const Index ma = a.ambient().mult, mb = b.ambient().mult;
  const Index na = a.ambient().base_dim(), nb = b.ambient().base_dim();
  const std::vector<int> word = block_swap_word(A, B);

  std::vector<SparseVec<F>> cols;
  cols.reserve(static_cast<std::size_t>(a.space_dim() * b.space_dim()));
  for (const auto& x : a.frame().frame())
    for (const auto& y : b.frame().frame()) {
      // (a, x) ⊗ (b, y) -> (a, b, x, y)
      SparseAccumulator<F> in;
      for (const auto& [i, u] : x.e)
        for (const auto& [j, w] : y.e)
          in.add((((i / na) * mb + j / nb) * na + i % na) * nb + j % nb, u * w);
      const SparseVec<F> moved = apply_word(V.R(), V.dim(), A + B, word, in.finish());
      // (a, b, y, x) -> (b, y) ⊗ (a, x)
      SparseAccumulator<F> out;
      for (const auto& [k, v] : moved.e) {
        const Index xa = k % na, rest = k / na, yb = rest % nb, lab = rest / nb;
        out.add(((lab % mb) * nb + yb) * (ma * na) + (lab / mb) * na + xa, v);
      }
      auto c = tensor_coordinates(b.frame(), a.frame(), out.finish());
      if (!c) throw NotInvariant("braiding: block swap leaves the presentation");
      cols.push_back(std::move(*c));
    }
  const Index n = a.space_dim() * b.space_dim();
  SpMat<F> m = from_columns(n, cols);
  if (rank(m) != n) throw Error("braiding: block swap restricts to a singular map");
  return m;
}

namespace {

template <class F>
SpMat<F> basis_matrix(const Subspace<F>& s) {
  return from_columns(s.ambient_dim(), s.basis_vectors());
}

// φ: Γ → ⊗^n → S, induced by the identity of the common ambient, so φ ⊗ φ
// intertwines the induced R-matrices whenever it is invertible.
template <class F>
bool pairs_isomorphic(const EvalResult<F>& div, const EvalResult<F>& sym) {
  const Index n = sym.space_dim();
  std::vector<SparseVec<F>> cols;
  for (const auto& x : div.frame().frame()) {
    auto c = sym.frame().coordinates(x);
    if (!c) return false;
    cols.push_back(std::move(*c));
  }
  const SpMat<F> phi = from_columns(n, cols);
  if (phi.cols() != n || rank(phi) != n) return false;
  const SpMat<F> phi2 = kron(phi, phi);
  return equal(mul(phi2, div.induced_pair().R()), mul(sym.induced_pair().R(), phi2));
}

}  // namespace

template <class F>
SesReport verify_ses(const HeckePair<F>& V) {
  const SignedSpaces<F> s = signed_spaces(V);
  const Index n2 = V.dim() * V.dim();
  const auto sym = eval_obj(FunctorExpr::qsym(2), V);
  SesReport r;

  // 0 -> Λ² -> ⊗² -> S² -> 0
  {
    const SpMat<F> p1 = basis_matrix(s.neg);
    const SpMat<F> p2 = sym.frame().coord_map();
    const Index r1 = rank(p1), r2 = rank(p2);
    SesCheck& c = r.ext_sym;
    c = {s.neg.dim(), n2, sym.space_dim()};
    c.composite_zero = is_zero(mul(p2, p1));
    c.injective = r1 == c.dim_sub;
    c.surjective = r2 == c.dim_quot;
    c.middle_exact = n2 - r2 == r1;
  }

  // 0 -> Γ² -> ⊗² -> Λ² -> 0
  {
    const JordanData<F> jd = pair_jordan(V);
    r.N = jd.max_block();
    r.eigenvalues = jd.to_string();
    const int e = std::max(V.degree_e(), 1);
    const EigenCensus<F> census = eigen_census(V.R(), V.field(), 2 * e * e + 1);
    SpMat<F> P = identity<F>(n2);
    for (const auto& ent : census.eigenvalues) {
      if (!ent.positive()) continue;
      const SpMat<F> shifted = sub(V.R(), scalar_matrix(n2, ent.value));
      for (int k = 0; k < r.N; ++k) P = mul(shifted, P);
    }
    const SpMat<F> p1 = basis_matrix(s.pos);
    const Index r1 = rank(p1), r2 = rank(P);
    SesCheck& c = r.div_ext;
    c = {s.pos.dim(), n2, s.neg.dim()};
    bool into = true;
    for (const auto& col : columns_of(P)) into = into && s.neg.contains(col);
    c.composite_zero = is_zero(mul(P, p1));
    c.injective = r1 == c.dim_sub;
    c.surjective = into && r2 == c.dim_quot;
    c.middle_exact = n2 - r2 == r1;
  }
  return r;
}

template <class F>
DualReport dual_check(int n, const HeckePair<F>& V) {
  const HeckePair<F> D = dual_pair(V);
  auto at = [&](FunctorExpr e, const HeckePair<F>& P) { return eval_obj(e, P); };
  const auto ext = at(FunctorExpr::qext(n), V), ext_d = at(FunctorExpr::qext(n), D);
  const auto sym = at(FunctorExpr::qsym(n), V), sym_d = at(FunctorExpr::qsym(n), D);
  const auto div = at(FunctorExpr::qdiv(n), V), div_d = at(FunctorExpr::qdiv(n), D);
  DualReport r;
  r.n = n;
  r.ext = ext.space_dim();
  r.ext_dual = ext_d.space_dim();
  r.sym = sym.space_dim();
  r.div_dual = div_d.space_dim();
  r.div = div.space_dim();
  r.sym_dual = sym_d.space_dim();
  r.ext_pairs_agree = ext.induced_pair().same_data(ext_d.induced_pair());
  r.sym_div_pairs_agree = r.sym == r.div_dual && pairs_isomorphic(div_d, sym);
  return r;
}

#define QPF_INSTANTIATE(F)                                                                  \
  template SpMat<F> braiding<F>(const FunctorExpr&, const FunctorExpr&, const HeckePair<F>&); \
  template SesReport verify_ses<F>(const HeckePair<F>&);                                    \
  template DualReport dual_check<F>(int, const HeckePair<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
