#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpf/pairs/pair.hpp"

namespace qpf {

struct EHeckeResult {
  Index dim = 0;
  bool exact = false;
  std::string point;          // specialization point in probabilistic mode
  Index probabilistic_dim = -1;  // exact mode: the cross-check value
  bool undercount_warning = false;  // n < d e
};

/// Rational point used by the probabilistic mode; seed 0 gives 5/3.
mpq_class specialization_point(unsigned long long seed);

/// dim of the algebra generated by ρ(T_{w_i}) on (V_n^{⊗e})^{⊗d}. Exact mode
/// works over ℚ(q) and cross-checks against the specialization, which can
/// only lower the dimension.
EHeckeResult ehecke_dim(int d, int e, int n, bool exact, unsigned long long seed = 0);

template <class F>
struct WitnessResult {
  std::vector<F> values;                    // T_i on the 1-dim module cable(V_1, f)
  std::vector<std::pair<int, int>> collisions;  // f < g with equal values
  bool distinct() const { return collisions.empty(); }
};

/// q^{f^2} for f = 1..f_max, each read off from the braid action of
/// cable(V_1, f) on d strands.
template <class F>
WitnessResult<F> nongeneration_witness(int d, int f_max, const FieldSpec& field);

}  // namespace qpf
