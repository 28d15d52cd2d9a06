#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "qpf/errors.hpp"
#include "qpf/scalar/field.hpp"

namespace qpf {

namespace detail {

// Recursive-descent parser for arithmetic expressions in one variable:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | variable | '(' expr ')'
template <class F, class MakeInt, class MakeVar>
class ScalarParser {
 public:
  ScalarParser(std::string_view text, MakeInt make_int, MakeVar make_var)
      : s_(text), make_int_(make_int), make_var_(make_var) {}

  F run() {
    F v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    std::string tok = pos_ < s_.size() ? std::string(s_.substr(pos_, 1)) : std::string();
    throw ParseError("scalar parse error: " + what, pos_, tok);
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }
  F expr() {
    F v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  F term() {
    F v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        F d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }
  F unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  F power() {
    F base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    int k = std::stoi(d);
    if (neg && base.is_zero()) fail("negative power of zero");
    return base.pow(neg ? -k : k);
  }
  F atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      F v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make_int_(mpz_class(digits()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      std::optional<F> v = make_var_(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return *v;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  MakeInt make_int_;
  MakeVar make_var_;
};

}  // namespace detail

}  // namespace qpf
