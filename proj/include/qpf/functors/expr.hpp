#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qpf {

/// Immutable syntax tree of a quantum polynomial functor.
///
///   expr := tensor(d) | qsym(d) | qext(d) | qdiv(d) | repdiv(PAIR, d) | unit
///         | dsum(expr, expr) | tprod(expr, expr) | compose(expr, expr) | dual(expr)
///
/// PAIR is a pair descriptor (see parse_pair), resolved over the field of the
/// argument at evaluation time. unit is tensor(0).
class FunctorExpr {
 public:
  enum class Kind { Tensor, QSym, QExt, QDiv, RepDiv, DirectSum, TensorProd, Compose, Dual };

  static FunctorExpr tensor(int d);
  static FunctorExpr qsym(int d);
  static FunctorExpr qext(int d);
  static FunctorExpr qdiv(int d);
  static FunctorExpr repdiv(std::string pair, int d);
  // Throws DegreeMismatch unless both sides have the same degree.
  static FunctorExpr direct_sum(FunctorExpr f, FunctorExpr g);
  static FunctorExpr tensor_prod(FunctorExpr f, FunctorExpr g);
  // Throws Unsupported if g contains a repdiv node.
  static FunctorExpr compose(FunctorExpr f, FunctorExpr g);
  static FunctorExpr dual(FunctorExpr f);

  /// Throws ParseError with the offending position and token.
  static FunctorExpr parse(std::string_view text);

  Kind kind() const { return n_->kind; }
  int d() const { return n_->d; }
  const std::string& pair_descriptor() const { return n_->pair; }
  const FunctorExpr& left() const { return n_->kids.at(0); }
  const FunctorExpr& right() const { return n_->kids.at(1); }

  int degree() const { return n_->degree; }
  // No repdiv node anywhere, so values carry an induced pair.
  bool composable() const { return n_->composable; }
  const std::string& to_string() const { return n_->text; }

  friend bool operator==(const FunctorExpr& a, const FunctorExpr& b) { return a.to_string() == b.to_string(); }

 private:
  struct Node {
    Kind kind;
    int d = 0;
    std::string pair;
    std::vector<FunctorExpr> kids;
    int degree = 0;
    bool composable = true;
    std::string text;
  };
  explicit FunctorExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static FunctorExpr leaf(Kind k, int d, std::string pair = {});
  static FunctorExpr binary(Kind k, FunctorExpr f, FunctorExpr g);
  std::shared_ptr<const Node> n_;
};

}  // namespace qpf
