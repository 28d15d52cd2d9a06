#include "qpf/scalar/ratfunc.hpp"

#include <algorithm>
#include <utility>

#include "qpf/errors.hpp"

namespace qpf {

namespace {

int term_count(const ZPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n;
}

}  // namespace

RatFunc::RatFunc(long c) : num_(c) {}

RatFunc::RatFunc(const mpz_class& c) : num_(std::vector<mpz_class>{c}) {}

RatFunc::RatFunc(const mpq_class& c) {
  *this = make(0, ZPoly(std::vector<mpz_class>{c.get_num()}),
               ZPoly(std::vector<mpz_class>{c.get_den()}));
}

RatFunc RatFunc::q_pow(int k) {
  RatFunc r(1);
  r.shift_ = k;
  return r;
}

RatFunc RatFunc::generator(const FieldSpec& spec) {
  require_kind<RatFunc>(spec);
  return q();
}

RatFunc RatFunc::make(int shift, ZPoly num, ZPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  const int a = num.low_order(), b = den.low_order();
  num = num.div_q_pow(a);
  den = den.div_q_pow(b);
  shift += a - b;
  if (!den.is_one()) {
    if (den.is_constant()) {
      mpz_class g = num.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.coeffs()[0].get_mpz_t());
      if (g != 1) {
        num = num.divexact(g);
        den = den.divexact(g);
      }
    } else {
      ZPoly g = ZPoly::gcd(num, den);
      if (!g.is_one()) {
        num = ZPoly::divexact(num, g);
        den = ZPoly::divexact(den, g);
      }
    }
    if (den.lc() < 0) {
      num = -num;
      den = -den;
    }
  }
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc rf_normalize(const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rf_normalize: zero denominator");
  return RatFunc::make(0, num, den);
}

ZPoly RatFunc::numerator() const { return shift_ > 0 ? num_.mul_q_pow(shift_) : num_; }

ZPoly RatFunc::denominator() const { return shift_ < 0 ? den_.mul_q_pow(-shift_) : den_; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  RatFunc r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lc() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int s = std::min(a.shift_, b.shift_);
  ZPoly na = a.num_.mul_q_pow(a.shift_ - s);
  ZPoly nb = b.num_.mul_q_pow(b.shift_ - s);
  if (a.den_ == b.den_) return RatFunc::make(s, na + nb, a.den_);
  ZPoly g = ZPoly::gcd(a.den_, b.den_);
  if (g.is_one()) return RatFunc::make(s, na * b.den_ + nb * a.den_, a.den_ * b.den_);
  ZPoly da = ZPoly::divexact(a.den_, g), db = ZPoly::divexact(b.den_, g);
  return RatFunc::make(s, na * db + nb * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatFunc r;
  r.shift_ = a.shift_ + b.shift_;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  ZPoly g1 = ZPoly::gcd(a.num_, b.den_), g2 = ZPoly::gcd(b.num_, a.den_);
  ZPoly an = g1.is_one() ? a.num_ : ZPoly::divexact(a.num_, g1);
  ZPoly bd = g1.is_one() ? b.den_ : ZPoly::divexact(b.den_, g1);
  ZPoly bn = g2.is_one() ? b.num_ : ZPoly::divexact(b.num_, g2);
  ZPoly ad = g2.is_one() ? a.den_ : ZPoly::divexact(a.den_, g2);
  r.num_ = an * bn;
  r.den_ = ad * bd;
  if (r.den_.lc() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

std::string RatFunc::to_string() const {
  ZPoly n = numerator(), d = denominator();
  if (d.is_one()) return n.to_string();
  std::string ns = n.to_string(), ds = d.to_string();
  if (term_count(n) > 1) ns = "(" + ns + ")";
  const bool bare_den = term_count(d) == 1 && (d.degree() == 0 || d.lc() == 1);
  if (!bare_den) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace qpf
