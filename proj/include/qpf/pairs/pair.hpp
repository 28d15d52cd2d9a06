#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpf/linalg/types.hpp"
#include "qpf/pairs/frame.hpp"
#include "qpf/scalar/field.hpp"
#include "qpf/scalar/ratfunc.hpp"

namespace qpf {

struct Provenance {
  enum class Kind { Standard, Cable, DirectSum, Subquotient, Dual, Explicit, Unit };

  Kind kind = Kind::Explicit;
  int n = 0;  // Standard: n; Cable: e
  std::vector<Provenance> children;
  std::string label;  // Subquotient/Explicit: free-form description

  static Provenance standard(int n) { return {Kind::Standard, n, {}, {}}; }
  static Provenance cable(Provenance base, int e) { return {Kind::Cable, e, {std::move(base)}, {}}; }
  static Provenance direct_sum(std::vector<Provenance> parts) { return {Kind::DirectSum, 0, std::move(parts), {}}; }
  static Provenance dual(Provenance base) { return {Kind::Dual, 0, {std::move(base)}, {}}; }
  static Provenance subquotient(Provenance parent, std::string label) {
    return {Kind::Subquotient, 0, {std::move(parent)}, std::move(label)};
  }
  static Provenance explicit_pair(std::string label = {}) { return {Kind::Explicit, 0, {}, std::move(label)}; }
  static Provenance unit() { return {Kind::Unit, 0, {}, {}}; }

  // Descriptor-like text, e.g. "cable(std(2),2)".
  std::string to_string() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

template <class F>
class HeckePair;

/// The space k^mult ⊗ B^{⊗power} with the pair structure
///   R((a, x) ⊗ (b, y)) = Σ (b, x') ⊗ (a, y'),  Σ x' ⊗ y' = R_{B^{⊗power}}(x ⊗ y),
/// i.e. the sum of mult copies of cable(B, power) inside one common ambient.
/// Index of (a, x) is a * dim(B)^power + x.
template <class F>
struct Ambient {
  std::shared_ptr<const HeckePair<F>> base;
  int power = 1;
  Index mult = 1;

  Index base_dim() const;  // dim(B)^power
  Index dim() const { return mult * base_dim(); }
  // R on (k^mult ⊗ B^{⊗power})^{⊗2}, applied without forming the matrix.
  SparseVec<F> apply_R(const SparseVec<F>& x) const;
  bool same_as(const Ambient& o) const;
};

/// Realization of a pair as a subquotient of an ambient.
template <class F>
struct Embedding {
  Ambient<F> ambient;
  QuotientFrame<F> frame;
};

/// A Yang–Baxter space (V, R) of polynomial degree e. Basis of V ⊗ W is
/// ordered i * dim(W) + j throughout. Copies share data.
template <class F>
class HeckePair {
 public:
  struct Data {
    FieldSpec field;
    Index dim = 0;
    int degree_e = 1;
    SpMat<F> R;
    Provenance provenance;
    std::optional<Embedding<F>> embedding;
    // Set for cables of pairs without an embedding: this pair is
    // cable(cable_base, cable_power) with cable_base not itself a cable.
    std::shared_ptr<const HeckePair<F>> cable_base;
    int cable_power = 1;
  };

  HeckePair() = default;
  explicit HeckePair(Data d) : d_(std::make_shared<const Data>(std::move(d))) {}

  const FieldSpec& field() const { return d_->field; }
  Index dim() const { return d_->dim; }
  int degree_e() const { return d_->degree_e; }
  const SpMat<F>& R() const { return d_->R; }
  Mat<F> R_dense() const { return to_dense(d_->R); }
  const Provenance& provenance() const { return d_->provenance; }
  const std::optional<Embedding<F>>& embedding() const { return d_->embedding; }
  const Data& data() const { return *d_; }

  // Ambient this pair is presented in, with the presenting frame. Pairs
  // without an embedding are presented in themselves (or their cable base).
  Embedding<F> presentation() const;

  // Same field, dimension, degree and R-matrix.
  bool same_data(const HeckePair& o) const;
  // Stable textual hash of the pair data, for memo keys.
  const std::string& fingerprint() const;

  HeckePair with_provenance(Provenance p) const;

 private:
  std::shared_ptr<const Data> d_;
  mutable std::shared_ptr<const std::string> fp_;
};

/// (V_n, R_n): R(v_i ⊗ v_j) = v_j ⊗ v_i (i < j), q v_i ⊗ v_i,
/// (q − q^{-1}) v_i ⊗ v_j + v_j ⊗ v_i (i > j).
template <class F>
HeckePair<F> standard_pair(int n, const FieldSpec& field);

/// The one-dimensional degree-0 pair with R = [1] (unit object).
template <class F>
HeckePair<F> unit_pair(const FieldSpec& field);

/// R-matrix of V^{⊗e}: the braid lift of the swap of two adjacent e-blocks.
template <class F>
HeckePair<F> cable(const HeckePair<F>& base, int e);

/// Sum of pairs sharing a common ambient; off-diagonal blocks come from the
/// ambient R. Throws DegreeMismatch, IncompatibleAmbient.
template <class F>
HeckePair<F> direct_sum(const std::vector<HeckePair<F>>& parts);

/// Twisted dual: identical pair data.
template <class F>
HeckePair<F> dual_pair(const HeckePair<F>& p);

/// Pair on sub/quot with the induced R. Throws NotInvariant.
template <class F>
HeckePair<F> subquotient(const HeckePair<F>& p, const Subspace<F>& sub, const Subspace<F>& quot);

/// Pair induced on the subquotient presented by frame inside an ambient.
/// With check set, verifies that R preserves sub ⊗ sub and the kernel.
template <class F>
HeckePair<F> induced_pair(const Ambient<F>& amb, const QuotientFrame<F>& frame, int degree_e, Provenance prov,
                          bool check = true);

/// Validated pair from raw data. Throws InvalidPair unless R is square of
/// size dim², invertible and satisfies the Yang–Baxter equation.
template <class F>
HeckePair<F> explicit_pair(const FieldSpec& field, Index dim, int degree_e, const SpMat<F>& R,
                           std::string label = {});

/// R12 R23 R12 − R23 R12 R23 on V^{⊗3}.
template <class F>
SpMat<F> check_ybe(const HeckePair<F>& p);
/// (R − q)(R + q^{-1}) == 0.
template <class F>
bool check_hecke(const HeckePair<F>& p);

/// Entrywise image of a pair over ℚ(q) under q -> target. The embedding is
/// dropped; provenance is kept.
template <class G>
HeckePair<G> specialize_pair(const HeckePair<RatFunc>& p, const FieldSpec& target);

}  // namespace qpf
