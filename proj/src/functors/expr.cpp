#include "qpf/functors/expr.hpp"

#include <cctype>

#include "qpf/errors.hpp"

namespace qpf {

FunctorExpr FunctorExpr::leaf(Kind k, int d, std::string pair) {
  if (d < 0) throw Error("functor degree must be non-negative");
  Node n;
  n.kind = k;
  n.d = d;
  n.degree = d;
  n.composable = k != Kind::RepDiv;
  static const char* names[] = {"tensor", "qsym", "qext", "qdiv", "repdiv"};
  n.text = std::string(names[static_cast<int>(k)]) + "(" + (k == Kind::RepDiv ? pair + "," : "") + std::to_string(d) + ")";
  n.pair = std::move(pair);
  return FunctorExpr(std::make_shared<const Node>(std::move(n)));
}

FunctorExpr FunctorExpr::binary(Kind k, FunctorExpr f, FunctorExpr g) {
  Node n;
  n.kind = k;
  n.composable = f.composable() && g.composable();
  switch (k) {
    case Kind::DirectSum:
      n.degree = f.degree();
      n.text = "dsum(";
      break;
    case Kind::TensorProd:
      n.degree = f.degree() + g.degree();
      n.text = "tprod(";
      break;
    default:
      n.degree = f.degree() * g.degree();
      n.text = "compose(";
  }
  n.text += f.to_string() + "," + g.to_string() + ")";
  n.kids = {std::move(f), std::move(g)};
  return FunctorExpr(std::make_shared<const Node>(std::move(n)));
}

FunctorExpr FunctorExpr::tensor(int d) { return leaf(Kind::Tensor, d); }
FunctorExpr FunctorExpr::qsym(int d) { return leaf(Kind::QSym, d); }
FunctorExpr FunctorExpr::qext(int d) { return leaf(Kind::QExt, d); }
FunctorExpr FunctorExpr::qdiv(int d) { return leaf(Kind::QDiv, d); }
FunctorExpr FunctorExpr::repdiv(std::string pair, int d) { return leaf(Kind::RepDiv, d, std::move(pair)); }

FunctorExpr FunctorExpr::direct_sum(FunctorExpr f, FunctorExpr g) {
  if (f.degree() != g.degree())
    throw DegreeMismatch("dsum: degrees " + std::to_string(f.degree()) + " and " + std::to_string(g.degree()) +
                         " differ");
  return binary(Kind::DirectSum, std::move(f), std::move(g));
}

FunctorExpr FunctorExpr::tensor_prod(FunctorExpr f, FunctorExpr g) {
  return binary(Kind::TensorProd, std::move(f), std::move(g));
}

FunctorExpr FunctorExpr::compose(FunctorExpr f, FunctorExpr g) {
  if (!g.composable()) throw Unsupported("compose: the inner functor " + g.to_string() + " has no induced pair");
  return binary(Kind::Compose, std::move(f), std::move(g));
}

FunctorExpr FunctorExpr::dual(FunctorExpr f) {
  Node n;
  n.kind = Kind::Dual;
  n.degree = f.degree();
  n.composable = f.composable();
  n.text = "dual(" + f.to_string() + ")";
  n.kids = {std::move(f)};
  return FunctorExpr(std::make_shared<const Node>(std::move(n)));
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  FunctorExpr parse() {
    FunctorExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::size_t end = pos_;
    while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) && s_[end] != ',' && s_[end] != '(' && s_[end] != ')')
      ++end;
    std::string tok(s_.substr(pos_, end - pos_));
    if (tok.empty() && pos_ < s_.size()) tok = std::string(1, s_[pos_]);
    throw ParseError(what, pos_, tok);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  int integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a non-negative integer");
    if (pos_ - b > 4) {
      pos_ = b;
      fail("degree too large");
    }
    return std::stoi(std::string(s_.substr(b, pos_ - b)));
  }
  // Raw text of a pair descriptor, up to the comma closing it at depth 0.
  std::string pair_text() {
    skip();
    std::size_t b = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    std::size_t e = pos_;
    while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
    if (e == b) fail("expected a pair descriptor");
    return std::string(s_.substr(b, e - b));
  }

  FunctorExpr expr() {
    skip();
    const std::size_t start = pos_;
    const std::string name = word();
    if (name == "unit") return FunctorExpr::tensor(0);
    if (name == "tensor" || name == "qsym" || name == "qext" || name == "qdiv") {
      expect('(');
      int d = integer();
      expect(')');
      if (name == "tensor") return FunctorExpr::tensor(d);
      if (name == "qsym") return FunctorExpr::qsym(d);
      if (name == "qext") return FunctorExpr::qext(d);
      return FunctorExpr::qdiv(d);
    }
    if (name == "repdiv") {
      expect('(');
      std::string p = pair_text();
      expect(',');
      int d = integer();
      expect(')');
      return FunctorExpr::repdiv(std::move(p), d);
    }
    if (name == "dual") {
      expect('(');
      FunctorExpr f = expr();
      expect(')');
      return FunctorExpr::dual(std::move(f));
    }
    if (name == "dsum" || name == "tprod" || name == "compose") {
      expect('(');
      FunctorExpr f = expr();
      expect(',');
      skip();
      const std::size_t at = pos_;
      FunctorExpr g = expr();
      expect(')');
      try {
        if (name == "dsum") return FunctorExpr::direct_sum(std::move(f), std::move(g));
        if (name == "tprod") return FunctorExpr::tensor_prod(std::move(f), std::move(g));
        return FunctorExpr::compose(std::move(f), std::move(g));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        pos_ = at;
        fail(e.what());
      }
    }
    pos_ = start;
    fail(name.empty() ? "expected a functor expression" : "unknown functor");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FunctorExpr FunctorExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace qpf
