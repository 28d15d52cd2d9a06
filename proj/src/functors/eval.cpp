#include "qpf/functors/eval.hpp"

#include <map>
#include <typeinfo>

#include "qpf/commutant/hom.hpp"
#include "qpf/linalg/spectral.hpp"
#include "qpf/pairs/braid.hpp"
#include "qpf/pairs/io.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
EvalResult<F>::EvalResult(FunctorExpr expr, HeckePair<F> input, Ambient<F> ambient, QuotientFrame<F> frame,
                          std::function<HeckePair<F>()> make_pair)
    : expr_(std::move(expr)),
      input_(std::move(input)),
      ambient_(std::move(ambient)),
      frame_(std::move(frame)),
      lazy_(std::make_shared<Lazy>()) {
  lazy_->make = std::move(make_pair);
}

template <class F>
const HeckePair<F>& EvalResult<F>::induced_pair() const {
  if (!has_pair()) throw Unsupported(expr_.to_string() + " has no induced pair");
  std::call_once(lazy_->once, [&] { lazy_->value = lazy_->make(); });
  return lazy_->value;
}

template <class F>
HeckePair<F> EvalResult<F>::ambient_pair() const {
  return qpf::induced_pair(ambient_, QuotientFrame<F>::trivial(ambient_.dim()), degree() * input_.degree_e(),
                      Provenance::explicit_pair("ambient"));
}

namespace {

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const void>> cache;

template <class F>
SignedSpaces<F> compute_signed_spaces(const HeckePair<F>& V) {
  const int e = std::max(V.degree_e(), 1);
  const EigenCensus<F> c = eigen_census(V.R(), V.field(), 2 * e * e + 1);
  const Index n = V.R().rows();
  SignedSpaces<F> out{Subspace<F>(n), Subspace<F>(n)};
  for (const auto& ent : c.eigenvalues) {
    if (ent.positive() && ent.negative())
      throw AmbiguousSign("eigenvalue " + ent.value.to_string() + " is both +q^a and -q^b");
    Subspace<F>& target = ent.positive() ? out.pos : out.neg;
    target = subspace_sum(target, gen_eigenspace(V.R(), ent.value, ent.multiplicity));
  }
  return out;
}

template <class F>
Ambient<F> ambient_of(const HeckePair<F>& V, int power, Index mult) {
  return Ambient<F>{std::make_shared<const HeckePair<F>>(V), power, mult};
}

template <class F>
Provenance value_provenance(const FunctorExpr& e, const HeckePair<F>& V) {
  return Provenance::subquotient(V.provenance(), e.to_string() + "(" + V.provenance().to_string() + ")");
}

// full^{⊗i} ⊗ s ⊗ full^{⊗(d-i-2)} for s ⊆ V^{⊗2}.
template <class F>
Subspace<F> positional(const Subspace<F>& s, Index n, int d, int i) {
  return kron(kron(Subspace<F>::full(ipow(n, i)), s), Subspace<F>::full(ipow(n, d - i - 2)));
}

template <class F>
HeckePair<F> attach(const HeckePair<F>& p, Provenance prov, const Ambient<F>& amb, const QuotientFrame<F>& frame) {
  typename HeckePair<F>::Data d = p.data();
  d.provenance = std::move(prov);
  d.embedding = Embedding<F>{amb, frame};
  return HeckePair<F>(std::move(d));
}

template <class F>
EvalResult<F> eval_node(const FunctorExpr& e, const HeckePair<F>& V);

template <class F>
EvalResult<F> restricted(const FunctorExpr& e, const HeckePair<F>& V, Ambient<F> amb, QuotientFrame<F> frame,
                         bool with_pair) {
  std::function<HeckePair<F>()> make;
  if (with_pair) {
    const int deg = e.degree() * V.degree_e();
    make = [amb, frame, deg, prov = value_provenance(e, V)] { return induced_pair(amb, frame, deg, prov); };
  }
  return EvalResult<F>(e, V, std::move(amb), std::move(frame), std::move(make));
}

template <class F>
EvalResult<F> eval_power(const FunctorExpr& e, const HeckePair<F>& V) {
  const Index n = V.dim();
  const int d = e.d();
  using K = FunctorExpr::Kind;
  if (d == 0 || d == 1 || e.kind() == K::Tensor) {
    Ambient<F> amb = ambient_of(V, d, 1);
    QuotientFrame<F> frame = QuotientFrame<F>::trivial(ipow(n, d));
    auto make = [V, d, amb, frame, prov = value_provenance(e, V)] {
      HeckePair<F> p = d == 0 ? unit_pair<F>(V.field()) : cable(V, d);
      return attach(p, prov, amb, frame);
    };
    return EvalResult<F>(e, V, amb, frame, make);
  }
  const SignedSpaces<F> s = signed_spaces(V);
  const Index N = ipow(n, d);
  Subspace<F> sub = Subspace<F>::full(N), quot(N);
  for (int i = 0; i + 2 <= d; ++i) {
    switch (e.kind()) {
      case K::QExt: sub = subspace_intersect(sub, positional(s.neg, n, d, i)); break;
      case K::QDiv: sub = subspace_intersect(sub, positional(s.pos, n, d, i)); break;
      default: quot = subspace_sum(quot, positional(s.neg, n, d, i));
    }
  }
  return restricted(e, V, ambient_of(V, d, 1), QuotientFrame<F>::canonical(sub, quot), true);
}

template <class F>
EvalResult<F> eval_repdiv(const FunctorExpr& e, const HeckePair<F>& V) {
  const HeckePair<F> W = parse_pair<F>(e.pair_descriptor(), V.field());
  if (W.degree_e() != V.degree_e())
    throw DegreeMismatch("repdiv: " + e.pair_descriptor() + " has degree " + std::to_string(W.degree_e()) +
                         ", argument has degree " + std::to_string(V.degree_e()));
  const int d = e.d();
  const auto h = hom_basis(W, V, d);
  const Index rows = h->rows(), cols = h->cols();  // V^d x W^d
  // X ∈ Hom(W^d, V^d) sits in k^{cols} ⊗ V^{⊗d} at c * rows + r.
  std::vector<SparseVec<F>> vecs;
  for (const auto& flat : h->flat_basis()) {
    SparseAccumulator<F> acc;
    for (const auto& [k, x] : flat.e) acc.add((k % cols) * rows + k / cols, x);
    vecs.push_back(acc.finish());
  }
  const Index N = rows * cols;
  return EvalResult<F>(e, V, ambient_of(V, d, cols),
                       QuotientFrame<F>::canonical(Subspace<F>::span(N, vecs), Subspace<F>(N)), {});
}

template <class F>
EvalResult<F> eval_sum(const FunctorExpr& e, const HeckePair<F>& V) {
  const EvalResult<F> a = eval_obj(e.left(), V), b = eval_obj(e.right(), V);
  Ambient<F> amb = ambient_of(V, e.degree(), a.ambient().mult + b.ambient().mult);
  return restricted(e, V, amb, block_sum<F>({a.frame(), b.frame()}), a.has_pair() && b.has_pair());
}

template <class F>
EvalResult<F> eval_tprod(const FunctorExpr& e, const HeckePair<F>& V) {
  const EvalResult<F> a = eval_obj(e.left(), V), b = eval_obj(e.right(), V);
  const Index ma = a.ambient().mult, mb = b.ambient().mult;
  const Index na = a.ambient().base_dim(), nb = b.ambient().base_dim();
  // (a, x) ⊗ (b, y)  ->  (a, b, x, y)
  std::vector<Index> perm(static_cast<std::size_t>(ma * na * mb * nb));
  for (Index i = 0; i < ma * na; ++i)
    for (Index j = 0; j < mb * nb; ++j)
      perm[static_cast<std::size_t>(i * mb * nb + j)] = (((i / na) * mb + j / nb) * na + i % na) * nb + j % nb;
  Ambient<F> amb = ambient_of(V, a.degree() + b.degree(), ma * mb);
  return restricted(e, V, amb, relabel(tensor(a.frame(), b.frame()), perm), a.has_pair() && b.has_pair());
}

template <class F>
EvalResult<F> eval_compose(const FunctorExpr& e, const HeckePair<F>& V) {
  const EvalResult<F> g = eval_obj(e.right(), V);
  const HeckePair<F>& W = g.induced_pair();
  const EvalResult<F> f = eval_obj(e.left(), W);
  const int df = f.degree(), dg = g.degree();
  const Index mf = f.ambient().mult, mg = g.ambient().mult;
  const Index ng = g.ambient().base_dim(), bg = mg * ng;

  // W^{⊗df} inside (k^mg ⊗ V^{⊗dg})^{⊗df}, then mf copies.
  QuotientFrame<F> power = QuotientFrame<F>::trivial(1);
  for (int t = 0; t < df; ++t) power = t == 0 ? g.frame() : tensor(power, g.frame());
  const QuotientFrame<F> inner = block_sum(std::vector<QuotientFrame<F>>(static_cast<std::size_t>(mf), power));
  const QuotientFrame<F> lifted = compose_frames(inner, f.frame());

  // (a, (b_1, x_1), ..., (b_df, x_df))  ->  ((a, b_1, ..., b_df), x_1, ..., x_df)
  const Index blocks = ipow(bg, df);
  std::vector<Index> perm(static_cast<std::size_t>(mf * blocks));
  for (Index idx = 0; idx < mf * blocks; ++idx) {
    Index rest = idx % blocks, labels = idx / blocks;
    Index lb = 0, lx = 0, scale = 1;
    for (int t = 0; t < df; ++t, rest /= bg, scale *= ng) {
      const Index digit = rest % bg;
      lb += (digit / ng) * ipow(mg, t);
      lx += (digit % ng) * scale;
    }
    labels = labels * ipow(mg, df) + lb;
    perm[static_cast<std::size_t>(idx)] = labels * ipow(ng, df) + lx;
  }
  Ambient<F> amb = ambient_of(V, df * dg, mf * ipow(mg, df));
  QuotientFrame<F> frame = relabel(lifted, perm);
  std::function<HeckePair<F>()> make;
  if (f.has_pair())
    make = [f, amb, frame, prov = value_provenance(e, V)] { return attach(f.induced_pair(), prov, amb, frame); };
  return EvalResult<F>(e, V, amb, frame, make);
}

template <class F>
EvalResult<F> eval_dual(const FunctorExpr& e, const HeckePair<F>& V) {
  const EvalResult<F> r = eval_obj(e.left(), dual_pair(V));
  std::function<HeckePair<F>()> make;
  if (r.has_pair()) make = [r, prov = value_provenance(e, V)] { return r.induced_pair().with_provenance(prov); };
  return EvalResult<F>(e, V, r.ambient(), r.frame(), make);
}

template <class F>
EvalResult<F> eval_node(const FunctorExpr& e, const HeckePair<F>& V) {
  using K = FunctorExpr::Kind;
  switch (e.kind()) {
    case K::Tensor:
    case K::QSym:
    case K::QExt:
    case K::QDiv: return eval_power(e, V);
    case K::RepDiv: return eval_repdiv(e, V);
    case K::DirectSum: return eval_sum(e, V);
    case K::TensorProd: return eval_tprod(e, V);
    case K::Compose: return eval_compose(e, V);
    case K::Dual: return eval_dual(e, V);
  }
  throw Error("eval_obj: unknown node");
}

}  // namespace

template <class F>
SignedSpaces<F> signed_spaces(const HeckePair<F>& V) {
  using Memo = std::pair<HeckePair<F>, SignedSpaces<F>>;
  const std::string key = std::string("signed|") + typeid(F).name() + "|" + V.fingerprint();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      const auto& hit = *std::static_pointer_cast<const Memo>(it->second);
      if (hit.first.same_data(V)) return hit.second;
    }
  }
  auto r = std::make_shared<const Memo>(V, compute_signed_spaces(V));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return std::static_pointer_cast<const Memo>(cache.emplace(key, r).first->second)->second;
}

template <class F>
EvalResult<F> eval_obj(const FunctorExpr& e, const HeckePair<F>& V) {
  const std::string key = std::string(typeid(F).name()) + "|" + e.to_string() + "|" + V.fingerprint();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      const auto& hit = *std::static_pointer_cast<const EvalResult<F>>(it->second);
      if (hit.input().same_data(V)) return hit;
    }
  }
  auto r = std::make_shared<const EvalResult<F>>(eval_node(e, V));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return *std::static_pointer_cast<const EvalResult<F>>(cache.emplace(key, r).first->second);
}

void clear_eval_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

template <class F>
SpMat<F> eval_mor(const FunctorExpr& e, const SpMat<F>& f, const HeckePair<F>& V, const HeckePair<F>& W) {
  const int d = e.degree();
  if (!hom_basis(V, W, d)->contains(f))
    throw NotInCommutant("eval_mor: the morphism does not commute with the braid actions");
  const EvalResult<F> rv = eval_obj(e, V), rw = eval_obj(e, W);
  const Index m = rv.ambient().mult;
  if (rw.ambient().mult != m) throw Error("eval_mor: presentations have different multiplicities");
  const QuotientFrame<F>& target = rw.frame();
  auto image = [&](const SparseVec<F>& x) {
    auto c = target.coordinates(apply_right(m, f, x));
    if (!c) throw NotInvariant("eval_mor: image leaves the presentation of " + e.to_string());
    return *c;
  };
  for (const auto& k : rv.frame().quot().basis_vectors())
    if (!image(k).empty()) throw NotInvariant("eval_mor: kernel not mapped to the kernel");
  std::vector<SparseVec<F>> cols;
  for (const auto& x : rv.frame().frame()) cols.push_back(image(x));
  return from_columns(target.dim(), cols);
}

#define QPF_INSTANTIATE(F)                                                                                   \
  template class EvalResult<F>;                                                                             \
  template SignedSpaces<F> signed_spaces<F>(const HeckePair<F>&);                                           \
  template EvalResult<F> eval_obj<F>(const FunctorExpr&, const HeckePair<F>&);                              \
  template SpMat<F> eval_mor<F>(const FunctorExpr&, const SpMat<F>&, const HeckePair<F>&, const HeckePair<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
