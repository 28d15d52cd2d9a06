#pragma once

#include <string>
#include <vector>

#include "qpf/linalg/poly.hpp"
#include "qpf/linalg/subspace.hpp"
#include "qpf/linalg/types.hpp"
#include "qpf/scalar/field.hpp"

namespace qpf {

/// Minimal polynomial via Krylov sequences on e_0, e_1, ... (seeds already in
/// the accumulated Krylov span are skipped); the result is monic.
template <class F>
FieldPoly<F> min_poly(const SpMat<F>& m);
template <class F>
FieldPoly<F> min_poly(const Mat<F>& m);

template <class F>
struct JordanBlocks {
  F eigenvalue;
  std::vector<int> sizes;  // descending
};

template <class F>
struct JordanData {
  std::vector<JordanBlocks<F>> blocks;

  Index total() const {
    Index s = 0;
    for (const auto& b : blocks)
      for (int k : b.sizes) s += k;
    return s;
  }
  int max_block() const {
    int m = 0;
    for (const auto& b : blocks)
      for (int k : b.sizes) m = std::max(m, k);
    return m;
  }
  const JordanBlocks<F>* find(const F& lambda) const {
    for (const auto& b : blocks)
      if (b.eigenvalue == lambda) return &b;
    return nullptr;
  }
  // Same eigenvalues with the same block multisets, in any order.
  friend bool operator==(const JordanData& a, const JordanData& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    for (const auto& x : a.blocks) {
      const JordanBlocks<F>* y = b.find(x.eigenvalue);
      if (!y || y->sizes != x.sizes) return false;
    }
    return true;
  }
  std::string to_string() const;
};

/// Jordan structure from the rank sequences of (m - λ)^k over the candidates.
/// Throws MinPolyDoesNotSplit if the generalized eigenspaces of the
/// candidates do not fill the space.
template <class F>
JordanData<F> jordan(const SpMat<F>& m, const std::vector<F>& candidates);
template <class F>
JordanData<F> jordan(const Mat<F>& m, const std::vector<F>& candidates);

/// ker (m - λ)^N; N <= 0 means N = dim, computed by stopping once the kernel
/// stabilizes.
template <class F>
Subspace<F> gen_eigenspace(const SpMat<F>& m, const F& lambda, int N = 0);
template <class F>
Subspace<F> gen_eigenspace(const Mat<F>& m, const F& lambda, int N = 0);

struct SignedPower {
  int sign;      // +1 or -1
  int exponent;  // value is sign * q^exponent
  friend bool operator==(const SignedPower&, const SignedPower&) = default;
};

/// Eigenvalues of m located among ±q^r, |r| <= range.
template <class F>
struct EigenCensus {
  struct Entry {
    F value;
    int multiplicity;  // in the minimal polynomial
    std::vector<SignedPower> labels;
    std::vector<Index> ranks;  // rank (m - value)^k for k = 0 .. multiplicity + 1
    Index gen_dim() const { return ranks.front() - ranks.back(); }
    bool positive() const {
      for (const auto& l : labels)
        if (l.sign > 0) return true;
      return false;
    }
    bool negative() const {
      for (const auto& l : labels)
        if (l.sign < 0) return true;
      return false;
    }
  };
  FieldPoly<F> minpoly;
  std::vector<Entry> eigenvalues;
  int range = 0;
};

/// ±q^r for |r| <= range with duplicate values merged (labels accumulate).
template <class F>
std::vector<typename EigenCensus<F>::Entry> signed_power_candidates(const FieldSpec& field, int range);

/// Census with the range doubled up to max_doublings times on failure.
/// Eigenvalues are found by exact rank computations; over ℚ(q) and ℚ a rank
/// test modulo a prime first discards candidates that cannot be eigenvalues.
template <class F>
EigenCensus<F> eigen_census(const SpMat<F>& m, const FieldSpec& field, int range, int max_doublings = 3);

/// Jordan data over the ±q^r candidate set, widening as in eigen_census.
template <class F>
JordanData<F> jordan_auto(const SpMat<F>& m, const FieldSpec& field, int range);

}  // namespace qpf
