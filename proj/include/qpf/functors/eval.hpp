#pragma once

#include <functional>
#include <memory>
#include <mutex>

#include "qpf/functors/expr.hpp"
#include "qpf/pairs/pair.hpp"

namespace qpf {

/// F(V) presented as a subquotient of the ambient k^mult ⊗ V^{⊗degree(F)}.
/// The induced pair is computed on first use.
template <class F>
class EvalResult {
 public:
  EvalResult(FunctorExpr expr, HeckePair<F> input, Ambient<F> ambient, QuotientFrame<F> frame,
             std::function<HeckePair<F>()> make_pair);

  const FunctorExpr& expr() const { return expr_; }
  const HeckePair<F>& input() const { return input_; }
  const Ambient<F>& ambient() const { return ambient_; }
  const QuotientFrame<F>& frame() const { return frame_; }
  Index space_dim() const { return frame_.dim(); }
  int degree() const { return expr_.degree(); }

  bool has_pair() const { return static_cast<bool>(lazy_->make); }
  /// Throws Unsupported for values of repdiv nodes.
  const HeckePair<F>& induced_pair() const;
  /// The pair on the whole ambient.
  HeckePair<F> ambient_pair() const;

  // Same ambient and equivalent frames (see QuotientFrame::equivalent).
  bool same_presentation(const EvalResult& o) const {
    return ambient_.same_as(o.ambient_) && frame_.equivalent(o.frame_);
  }

 private:
  struct Lazy {
    std::function<HeckePair<F>()> make;
    std::once_flag once;
    HeckePair<F> value;
  };
  FunctorExpr expr_;
  HeckePair<F> input_;
  Ambient<F> ambient_;
  QuotientFrame<F> frame_;
  std::shared_ptr<Lazy> lazy_;
};

/// Evaluation on objects, memoized by (expression, pair fingerprint).
/// Throws MinPolyDoesNotSplit, AmbiguousSign, DegreeMismatch.
template <class F>
EvalResult<F> eval_obj(const FunctorExpr& e, const HeckePair<F>& V);

/// F(f) for f ∈ Hom_{B_d}(V^{⊗d}, W^{⊗d}), d = degree(F): the map induced by
/// 1 ⊗ f on the presentations. Throws NotInCommutant.
template <class F>
SpMat<F> eval_mor(const FunctorExpr& e, const SpMat<F>& f, const HeckePair<F>& V, const HeckePair<F>& W);

void clear_eval_cache();

/// Generalized eigenspaces of R_V at +q^r (pos) and -q^r (neg), r within
/// the Jordan candidate range. Throws AmbiguousSign.
template <class F>
struct SignedSpaces {
  Subspace<F> pos, neg;
};
template <class F>
SignedSpaces<F> signed_spaces(const HeckePair<F>& V);

}  // namespace qpf
