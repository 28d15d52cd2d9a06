#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpf/errors.hpp"

namespace qpf {

/// Univariate polynomial in t over an exact field, lowest degree first.
template <class F>
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
  static FieldPoly constant(const F& a) { return FieldPoly(std::vector<F>{a}); }
  // t - a
  static FieldPoly linear(const F& a) { return FieldPoly(std::vector<F>{-a, F(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& lc() const { return c_.back(); }

  FieldPoly monic() const {
    if (is_zero()) return *this;
    F inv = lc().inverse();
    FieldPoly r = *this;
    for (auto& x : r.c_) x = x * inv;
    return r;
  }

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return FieldPoly(std::move(r));
  }
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return FieldPoly(std::move(r));
  }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return FieldPoly(std::move(r));
  }
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }

  // a = quo * b + rem with deg rem < deg b.
  static void divmod(const FieldPoly& a, const FieldPoly& b, FieldPoly& quo, FieldPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<F> r = a.c_;
    std::vector<F> qv;
    if (a.degree() >= b.degree()) {
      qv.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
      const F inv = b.lc().inverse();
      for (int k = a.degree(); k >= b.degree(); --k) {
        const F& top = r[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        F t = top * inv;
        const int s = k - b.degree();
        for (int j = 0; j <= b.degree(); ++j)
          r[static_cast<std::size_t>(s + j)] -= t * b.c_[static_cast<std::size_t>(j)];
        qv[static_cast<std::size_t>(s)] = t;
      }
    }
    quo = FieldPoly(std::move(qv));
    rem = FieldPoly(std::move(r));
  }

  static FieldPoly gcd(FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
      FieldPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  static FieldPoly lcm(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FieldPoly g = gcd(a, b), q, r;
    divmod(a * b, g, q, r);
    return q.monic();
  }

  F eval(const F& x) const {
    F r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Multiplicity of x as a root.
  int root_multiplicity(const F& x) const {
    if (is_zero()) throw Error("root multiplicity of the zero polynomial");
    int m = 0;
    FieldPoly p = *this;
    const FieldPoly lin = linear(x);
    while (p.degree() >= 1) {
      FieldPoly q, r;
      divmod(p, lin, q, r);
      if (!r.is_zero()) break;
      ++m;
      p = std::move(q);
    }
    return m;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const F& c = c_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      std::string term = "(" + c.to_string() + ")";
      if (k > 0) term += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
      out += (out.empty() ? "" : " + ") + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

}  // namespace qpf
