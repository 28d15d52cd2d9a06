#include "qpf/commutant/hecke.hpp"

#include <random>

#include "qpf/commutant/braid_rep.hpp"
#include "qpf/linalg/closure.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

mpq_class specialization_point(unsigned long long seed) {
  if (seed == 0) return mpq_class(5, 3);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(2, 97);
  for (;;) {
    mpq_class v(dist(rng), dist(rng));
    v.canonicalize();
    if (v != 1) return v;
  }
}

namespace {

template <class F>
Index closure_dim(int d, int e, int n, const FieldSpec& field) {
  const BraidRep<F> rho = braid_rep(cable(standard_pair<F>(n, field), e), d);
  return algebra_closure(rho.gens, rho.dim()).dim;
}

}  // namespace

EHeckeResult ehecke_dim(int d, int e, int n, bool exact, unsigned long long seed) {
  if (d < 1 || e < 1 || n < 1) throw Error("ehecke_dim: d, e, n must be positive");
  EHeckeResult r;
  r.undercount_warning = n < d * e;
  const mpq_class pt = specialization_point(seed);
  r.point = pt.get_str();
  const Index prob = closure_dim<Rational>(d, e, n, FieldSpec::numeric(pt));
  if (!exact) {
    r.dim = prob;
    return r;
  }
  r.exact = true;
  r.probabilistic_dim = prob;
  r.dim = closure_dim<RatFunc>(d, e, n, FieldSpec::generic());
  if (prob > r.dim) throw Error("ehecke_dim: specialization exceeds the generic dimension");
  return r;
}

template <class F>
WitnessResult<F> nongeneration_witness(int d, int f_max, const FieldSpec& field) {
  if (d < 1 || f_max < 1) throw Error("nongeneration_witness: d and f_max must be positive");
  WitnessResult<F> out;
  for (int f = 1; f <= f_max; ++f) {
    const HeckePair<F> p = cable(standard_pair<F>(1, field), f);
    const F value = to_dense(p.R())(0, 0);
    for (const auto& g : braid_rep(p, d).gens)
      if (!equal(g, scalar_matrix<F>(1, value))) throw Error("nongeneration_witness: generators disagree");
    out.values.push_back(value);
  }
  for (int f = 0; f < f_max; ++f)
    for (int g = f + 1; g < f_max; ++g)
      if (out.values[static_cast<std::size_t>(f)] == out.values[static_cast<std::size_t>(g)])
        out.collisions.emplace_back(f + 1, g + 1);
  return out;
}

#define QPF_INSTANTIATE(F) template WitnessResult<F> nongeneration_witness<F>(int, int, const FieldSpec&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
