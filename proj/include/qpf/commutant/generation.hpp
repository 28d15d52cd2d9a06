#pragma once

#include "qpf/commutant/hom.hpp"
#include "qpf/linalg/spectral.hpp"

namespace qpf {

/// Whether Id on W^{⊗d} is a sum of maps factoring through V^{⊗d}.
template <class F>
bool generates(const HeckePair<F>& V, const HeckePair<F>& W, int d);

/// Jordan data of R over the ±q^r candidates, r up to 2e²+1 (widened on failure).
template <class F>
JordanData<F> pair_jordan(const HeckePair<F>& p);

/// Every Jordan block (eigenvalue, size) of R_U occurs among those of R_V.
template <class F>
bool jordan_factor_test(const HeckePair<F>& U, const HeckePair<F>& V);

}  // namespace qpf
