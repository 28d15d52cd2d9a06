#pragma once

#include <string>

#include "qpf/functors/eval.hpp"
#include "qpf/linalg/spectral.hpp"

namespace qpf {

/// F(V) ⊗ G(V) -> G(V) ⊗ F(V): the positive block-swap braid on
/// V^{⊗(a+b)} restricted to the presentations. Columns indexed i * dim G(V) + j
/// for frame vectors f_i, g_j; rows j * dim F(V) + i.
/// Throws Unsupported if F or G contains repdiv.
template <class F>
SpMat<F> braiding(const FunctorExpr& f, const FunctorExpr& g, const HeckePair<F>& V);

// 0 -> A -> V^{⊗2} -> C -> 0 with dims and exactness at each spot.
struct SesCheck {
  Index dim_sub = 0, dim_mid = 0, dim_quot = 0;
  bool composite_zero = false;  // p2 ∘ p1 = 0
  bool injective = false;       // rank p1 = dim_sub
  bool surjective = false;      // rank p2 = dim_quot
  bool middle_exact = false;    // dim ker p2 = rank p1
  bool ok() const { return composite_zero && injective && surjective && middle_exact; }
};

struct SesReport {
  SesCheck ext_sym;  // 0 -> Λ² -> ⊗² -> S² -> 0
  SesCheck div_ext;  // 0 -> Γ² -> ⊗² -> Λ² -> 0
  int N = 0;         // exponent of the product map: largest Jordan block of R_V
  std::string eigenvalues;
  bool ok() const { return ext_sym.ok() && div_ext.ok(); }
};

/// Both degree-2 sequences for V; the second uses
/// p2 = ∏ (R_V − λ)^N over the eigenvalues λ of the form +q^r.
template <class F>
SesReport verify_ses(const HeckePair<F>& V);

struct DualReport {
  int n = 0;
  Index ext = 0, ext_dual = 0;  // Λ^n(V), Λ^n(V^#)
  Index sym = 0, div_dual = 0;  // S^n(V), Γ^n(V^#)
  Index div = 0, sym_dual = 0;  // Γ^n(V), S^n(V^#)
  bool ext_pairs_agree = false;  // identical induced pairs on Λ^n
  bool sym_div_pairs_agree = false;  // S^n(V) ≅ Γ^n(V^#) via ⊗^n, as pairs
  bool ok() const {
    return ext == ext_dual && sym == div_dual && div == sym_dual && ext_pairs_agree && sym_div_pairs_agree;
  }
};

template <class F>
DualReport dual_check(int n, const HeckePair<F>& V);

}  // namespace qpf
