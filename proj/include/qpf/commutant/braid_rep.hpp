#pragma once

#include <vector>

#include "qpf/pairs/braid.hpp"
#include "qpf/pairs/pair.hpp"

namespace qpf {

/// ρ_{d,V}: gens[i] = 1^{⊗i} ⊗ R ⊗ 1^{⊗(d−i−2)} on V^{⊗d}.
template <class F>
struct BraidRep {
  int d = 1;
  HeckePair<F> pair;
  std::vector<SpMat<F>> gens;

  Index dim() const { return ipow(pair.dim(), d); }
};

/// Debug builds verify the braid relations on construction.
template <class F>
BraidRep<F> braid_rep(const HeckePair<F>& p, int d);

/// Residuals of T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1} and of distant
/// commutation; true when all vanish.
template <class F>
bool check_braid_relations(const BraidRep<F>& rho);

}  // namespace qpf
