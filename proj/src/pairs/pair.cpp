#include "qpf/pairs/pair.hpp"

#include <cstdint>
#include <cstdio>

#include "qpf/linalg/subspace.hpp"
#include "qpf/pairs/braid.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

std::string Provenance::to_string() const {
  auto join = [&] {
    std::string s;
    for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].to_string();
    return s;
  };
  switch (kind) {
    case Kind::Standard: return "std(" + std::to_string(n) + ")";
    case Kind::Cable: return "cable(" + join() + "," + std::to_string(n) + ")";
    case Kind::DirectSum: return "dsum(" + join() + ")";
    case Kind::Dual: return "dual(" + join() + ")";
    case Kind::Subquotient: return label.empty() ? "subquotient(" + join() + ")" : label;
    case Kind::Explicit: return label.empty() ? "explicit" : label;
    case Kind::Unit: return "unit";
  }
  return "?";
}

template <class F>
Index Ambient<F>::base_dim() const {
  return ipow(base->dim(), power);
}

template <class F>
SparseVec<F> Ambient<F>::apply_R(const SparseVec<F>& x) const {
  const Index n = base->dim();
  if (power == 1 && mult == 1) return apply(base->R(), x);
  const Index bd = base_dim(), N = dim();
  // (a, u) ⊗ (b, w)  ->  (a, b) ⊗ u ⊗ w, braid on the V-strands, then swap a and b.
  SparseAccumulator<F> acc;
  for (const auto& [idx, v] : x.e) {
    const Index left = idx / N, right = idx % N;
    const Index a = left / bd, u = left % bd, b = right / bd, w = right % bd;
    acc.add(((a * mult + b) * bd + u) * bd + w, v);
  }
  SparseVec<F> z = apply_word(base->R(), n, 2 * power, block_swap_word(power, power), acc.finish());
  for (const auto& [idx, v] : z.e) {
    const Index w = idx % bd, t = idx / bd;
    const Index u = t % bd, ab = t / bd;
    const Index a = ab / mult, b = ab % mult;
    acc.add((b * bd + u) * N + a * bd + w, v);
  }
  return acc.finish();
}

template <class F>
bool Ambient<F>::same_as(const Ambient& o) const {
  return power == o.power && mult == o.mult && base->same_data(*o.base);
}

template <class F>
Embedding<F> HeckePair<F>::presentation() const {
  if (d_->embedding) return *d_->embedding;
  Ambient<F> amb;
  if (d_->cable_base) {
    amb.base = d_->cable_base;
    amb.power = d_->cable_power;
  } else {
    amb.base = std::make_shared<const HeckePair<F>>(*this);
  }
  return {amb, QuotientFrame<F>::trivial(d_->dim)};
}

template <class F>
bool HeckePair<F>::same_data(const HeckePair& o) const {
  if (d_ == o.d_) return true;
  return d_->field == o.d_->field && d_->dim == o.d_->dim && d_->degree_e == o.d_->degree_e &&
         equal(d_->R, o.d_->R);
}

template <class F>
const std::string& HeckePair<F>::fingerprint() const {
  if (!fp_) {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
      h ^= 0xff;
      h *= 1099511628211ull;
    };
    eat(d_->field.to_string());
    eat(std::to_string(d_->dim));
    eat(std::to_string(d_->degree_e));
    for (Index j = 0; j < d_->R.outerSize(); ++j)
      for (typename SpMat<F>::InnerIterator it(d_->R, j); it; ++it)
        eat(std::to_string(it.row()) + "," + std::to_string(j) + "=" + it.value().to_string());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%016llx/%ld/%d", static_cast<unsigned long long>(h), static_cast<long>(d_->dim),
                  d_->degree_e);
    fp_ = std::make_shared<const std::string>(buf);
  }
  return *fp_;
}

template <class F>
HeckePair<F> HeckePair<F>::with_provenance(Provenance p) const {
  Data d = *d_;
  d.provenance = std::move(p);
  return HeckePair(std::move(d));
}

template <class F>
HeckePair<F> standard_pair(int n, const FieldSpec& field) {
  if (n < 1) throw InvalidPair("standard_pair: n must be positive");
  require_kind<F>(field);
  const F q = F::generator(field);
  const F diff = q - q.inverse();
  const Index nn = n;
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(nn * nn));
  for (Index i = 0; i < nn; ++i)
    for (Index j = 0; j < nn; ++j) {
      SparseAccumulator<F> acc;
      if (i == j) {
        acc.add(i * nn + j, q);
      } else {
        acc.add(j * nn + i, F(1));
        if (i > j) acc.add(i * nn + j, diff);
      }
      cols[static_cast<std::size_t>(i * nn + j)] = acc.finish();
    }
  typename HeckePair<F>::Data d;
  d.field = field;
  d.dim = nn;
  d.degree_e = 1;
  d.R = from_columns(nn * nn, cols);
  d.provenance = Provenance::standard(n);
  return HeckePair<F>(std::move(d));
}

template <class F>
HeckePair<F> unit_pair(const FieldSpec& field) {
  require_kind<F>(field);
  typename HeckePair<F>::Data d;
  d.field = field;
  d.dim = 1;
  d.degree_e = 0;
  d.R = identity<F>(1);
  d.provenance = Provenance::unit();
  return HeckePair<F>(std::move(d));
}

template <class F>
HeckePair<F> cable(const HeckePair<F>& base, int e) {
  if (e < 1) throw InvalidPair("cable: e must be positive");
  if (e == 1) return base;
  typename HeckePair<F>::Data d;
  d.field = base.field();
  d.dim = ipow(base.dim(), e);
  d.degree_e = base.degree_e() * e;
  d.R = word_matrix(base.R(), base.dim(), 2 * e, block_swap_word(e, e));
  d.provenance = Provenance::cable(base.provenance(), e);
  const auto& bd = base.data();
  if (!bd.embedding && bd.cable_base) {
    d.cable_base = bd.cable_base;
    d.cable_power = bd.cable_power * e;
  } else {
    d.cable_base = std::make_shared<const HeckePair<F>>(base);
    d.cable_power = e;
  }
  return HeckePair<F>(std::move(d));
}

template <class F>
HeckePair<F> induced_pair(const Ambient<F>& amb, const QuotientFrame<F>& frame, int degree_e, Provenance prov,
                          bool check) {
  const Index n = amb.dim();
  if (frame.ambient_dim() != n) throw DimensionMismatch("induced_pair: frame does not live in the ambient");
  const Index w = frame.dim();
  auto image = [&](const SparseVec<F>& x, const char* what) {
    auto c = tensor_coordinates(frame, frame, amb.apply_R(x));
    if (!c) throw NotInvariant(std::string("R does not preserve the subspace (") + what + ")");
    return *c;
  };
  std::vector<SparseVec<F>> cols(static_cast<std::size_t>(w * w));
  for (Index a = 0; a < w; ++a)
    for (Index b = 0; b < w; ++b)
      cols[static_cast<std::size_t>(a * w + b)] =
          image(kron(frame.frame()[static_cast<std::size_t>(a)], frame.frame()[static_cast<std::size_t>(b)], n), "sub");
  if (check && !frame.quot().is_zero()) {
    std::vector<SparseVec<F>> s = frame.frame();
    for (const auto& v : frame.quot().basis_vectors()) s.push_back(v);
    for (const auto& k : frame.quot().basis_vectors())
      for (const auto& v : s)
        if (!image(kron(k, v, n), "kernel").empty() || !image(kron(v, k, n), "kernel").empty())
          throw NotInvariant("R does not preserve the quotient kernel");
  }
  typename HeckePair<F>::Data d;
  d.field = amb.base->field();
  d.dim = w;
  d.degree_e = degree_e;
  d.R = from_columns(w * w, cols);
  d.provenance = std::move(prov);
  d.embedding = Embedding<F>{amb, frame};
  return HeckePair<F>(std::move(d));
}

template <class F>
HeckePair<F> direct_sum(const std::vector<HeckePair<F>>& parts) {
  if (parts.empty()) throw InvalidPair("direct_sum: no summands");
  if (parts.size() == 1) return parts.front();
  std::vector<Embedding<F>> pres;
  std::vector<Provenance> provs;
  for (const auto& p : parts) {
    if (!(p.field() == parts.front().field())) throw FieldMismatch("direct_sum: summands over different fields");
    if (p.degree_e() != parts.front().degree_e())
      throw DegreeMismatch("direct_sum: summands of degrees " + std::to_string(parts.front().degree_e()) + " and " +
                           std::to_string(p.degree_e()));
    pres.push_back(p.presentation());
    provs.push_back(p.provenance());
  }
  Ambient<F> amb = pres.front().ambient;
  amb.mult = 0;
  std::vector<QuotientFrame<F>> frames;
  for (const auto& e : pres) {
    if (e.ambient.power != amb.power || !e.ambient.base->same_data(*amb.base))
      throw IncompatibleAmbient("direct_sum: summands are not subquotients of a common ambient pair");
    amb.mult += e.ambient.mult;
    frames.push_back(e.frame);
  }
  return induced_pair(amb, block_sum(frames), parts.front().degree_e(), Provenance::direct_sum(std::move(provs)));
}

template <class F>
HeckePair<F> dual_pair(const HeckePair<F>& p) {
  return p.with_provenance(Provenance::dual(p.provenance()));
}

template <class F>
HeckePair<F> subquotient(const HeckePair<F>& p, const Subspace<F>& sub, const Subspace<F>& quot) {
  if (sub.ambient_dim() != p.dim() || quot.ambient_dim() != p.dim())
    throw DimensionMismatch("subquotient: subspaces do not live in the pair");
  QuotientFrame<F> qf = QuotientFrame<F>::canonical(sub, quot);
  if (qf.is_trivial()) return p;
  Ambient<F> self{std::make_shared<const HeckePair<F>>(p), 1, 1};
  Provenance prov = Provenance::subquotient(p.provenance(), {});
  HeckePair<F> local = induced_pair(self, qf, p.degree_e(), prov);
  Embedding<F> outer = p.presentation();
  typename HeckePair<F>::Data d = local.data();
  d.embedding = Embedding<F>{outer.ambient, compose_frames(outer.frame, qf)};
  return HeckePair<F>(std::move(d));
}

template <class F>
SpMat<F> check_ybe(const HeckePair<F>& p) {
  const SpMat<F> a = word_matrix(p.R(), p.dim(), 3, {0, 1, 0});
  const SpMat<F> b = word_matrix(p.R(), p.dim(), 3, {1, 0, 1});
  return sub(a, b);
}

template <class F>
bool check_hecke(const HeckePair<F>& p) {
  const F q = F::generator(p.field());
  const Index n = p.R().rows();
  const SpMat<F> a = sub(p.R(), scalar_matrix<F>(n, q));
  const SpMat<F> b = add(p.R(), scalar_matrix<F>(n, q.inverse()));
  return is_zero(mul(a, b));
}

template <class F>
HeckePair<F> explicit_pair(const FieldSpec& field, Index dim, int degree_e, const SpMat<F>& R, std::string label) {
  require_kind<F>(field);
  if (dim < 1) throw InvalidPair("explicit pair: dimension must be positive");
  if (degree_e < 0) throw InvalidPair("explicit pair: negative degree");
  if (R.rows() != dim * dim || R.cols() != dim * dim)
    throw InvalidPair("explicit pair: R must be " + std::to_string(dim * dim) + "x" + std::to_string(dim * dim));
  if (rank(R) != dim * dim) throw InvalidPair("explicit pair: R is not invertible");
  typename HeckePair<F>::Data d;
  d.field = field;
  d.dim = dim;
  d.degree_e = degree_e;
  d.R = R;
  d.provenance = Provenance::explicit_pair(std::move(label));
  HeckePair<F> p(std::move(d));
  if (!is_zero(check_ybe(p))) throw InvalidPair("explicit pair: R does not satisfy the Yang-Baxter equation");
  return p;
}

template <class G>
HeckePair<G> specialize_pair(const HeckePair<RatFunc>& p, const FieldSpec& target) {
  require_kind<G>(target);
  const SpMat<RatFunc>& r = p.R();
  std::vector<SparseVec<G>> cols(static_cast<std::size_t>(r.cols()));
  for (Index j = 0; j < r.cols(); ++j) {
    SparseAccumulator<G> acc;
    for (SpMat<RatFunc>::InnerIterator it(r, j); it; ++it) acc.add(it.row(), specialize_to<G>(it.value(), target));
    cols[static_cast<std::size_t>(j)] = acc.finish();
  }
  typename HeckePair<G>::Data d;
  d.field = target;
  d.dim = p.dim();
  d.degree_e = p.degree_e();
  d.R = from_columns(r.rows(), cols);
  d.provenance = p.provenance();
  return HeckePair<G>(std::move(d));
}

template HeckePair<Rational> specialize_pair<Rational>(const HeckePair<RatFunc>&, const FieldSpec&);
template HeckePair<Cyclotomic> specialize_pair<Cyclotomic>(const HeckePair<RatFunc>&, const FieldSpec&);

#define QPF_INSTANTIATE(F)                                                                                     \
  template struct Ambient<F>;                                                                                 \
  template class HeckePair<F>;                                                                                \
  template HeckePair<F> standard_pair<F>(int, const FieldSpec&);                                              \
  template HeckePair<F> unit_pair<F>(const FieldSpec&);                                                       \
  template HeckePair<F> cable<F>(const HeckePair<F>&, int);                                                   \
  template HeckePair<F> direct_sum<F>(const std::vector<HeckePair<F>>&);                                      \
  template HeckePair<F> dual_pair<F>(const HeckePair<F>&);                                                    \
  template HeckePair<F> subquotient<F>(const HeckePair<F>&, const Subspace<F>&, const Subspace<F>&);          \
  template HeckePair<F> induced_pair<F>(const Ambient<F>&, const QuotientFrame<F>&, int, Provenance, bool);   \
  template HeckePair<F> explicit_pair<F>(const FieldSpec&, Index, int, const SpMat<F>&, std::string);         \
  template SpMat<F> check_ybe<F>(const HeckePair<F>&);                                                        \
  template bool check_hecke<F>(const HeckePair<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
