#include "qpf/commutant/braid_rep.hpp"

#include "qpf/scalar.hpp"

namespace qpf {

template <class F>
BraidRep<F> braid_rep(const HeckePair<F>& p, int d) {
  if (d < 0) throw Error("braid_rep: d must be non-negative");
  BraidRep<F> r{d, p, {}};
  for (int i = 0; i + 1 < d; ++i)
    r.gens.push_back(d == 2 ? p.R() : word_matrix(p.R(), p.dim(), d, {i}));
#ifndef NDEBUG
  if (!check_braid_relations(r)) throw InvalidPair("braid_rep: braid relations fail");
#endif
  return r;
}

template <class F>
bool check_braid_relations(const BraidRep<F>& rho) {
  const auto& g = rho.gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1) {
        if (!equal(mul(mul(g[i], g[j]), g[i]), mul(mul(g[j], g[i]), g[j]))) return false;
      } else if (!equal(mul(g[i], g[j]), mul(g[j], g[i]))) {
        return false;
      }
    }
  return true;
}

#define QPF_INSTANTIATE(F)                                  \
  template struct BraidRep<F>;                              \
  template BraidRep<F> braid_rep<F>(const HeckePair<F>&, int); \
  template bool check_braid_relations<F>(const BraidRep<F>&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
