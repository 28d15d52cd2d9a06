#include "qpf/scalar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "qpf/errors.hpp"

namespace qpf {

const ZPoly& cyclotomic_polynomial(int l) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ZPoly>> cache;
  if (l < 1) throw Error("cyclotomic_polynomial: order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(l); it != cache.end()) return *it->second;
  // Φ_l = (z^l - 1) / prod_{d | l, d < l} Φ_d, computed without re-locking.
  std::vector<int> divisors;
  for (int d = 1; d < l; ++d)
    if (l % d == 0) divisors.push_back(d);
  ZPoly p = ZPoly::monomial(1, l) - ZPoly(1);
  for (int d : divisors) {
    auto it = cache.find(d);
    ZPoly phi_d;
    if (it != cache.end()) {
      phi_d = *it->second;
    } else {
      // Divisors are visited in increasing order, so their own divisors are cached.
      ZPoly q = ZPoly::monomial(1, d) - ZPoly(1);
      for (int e = 1; e < d; ++e)
        if (d % e == 0) q = ZPoly::divexact(q, *cache.at(e));
      cache.emplace(d, std::make_unique<ZPoly>(q));
      phi_d = q;
    }
    p = ZPoly::divexact(p, phi_d);
  }
  return *cache.emplace(l, std::make_unique<ZPoly>(std::move(p))).first->second;
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = quo * b + rem
void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  quo.clear();
  if (a.size() < b.size()) return;
  quo.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class inv_lc = 1 / b.back();
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    if (rem[k] == 0) continue;
    mpq_class t = rem[k] * inv_lc;
    const std::size_t s = k - (b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) rem[s + j] -= t * b[j];
    quo[s] = t;
  }
  trim(quo);
  trim(rem);
}

QPoly phi_q(int l) {
  const ZPoly& phi = cyclotomic_polynomial(l);
  QPoly r;
  for (const auto& c : phi.coeffs()) r.emplace_back(c);
  return r;
}

}  // namespace

Cyclotomic::Cyclotomic(long c) {
  if (c != 0) c_.emplace_back(c);
}

Cyclotomic::Cyclotomic(const mpq_class& c, int order) : order_(order) {
  if (c != 0) c_.push_back(c);
}

Cyclotomic::Cyclotomic(std::vector<mpq_class> coeffs, int order) : order_(order), c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  reduce();
}

Cyclotomic Cyclotomic::zeta_pow(int l, long k) {
  if (l < 2) throw Error("root of unity order must exceed 1");
  long e = k % l;
  if (e < 0) e += l;
  std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, mpq_class(0));
  c.back() = 1;
  return {std::move(c), l};
}

Cyclotomic Cyclotomic::generator(const FieldSpec& spec) {
  require_kind<Cyclotomic>(spec);
  return zeta(spec.order);
}

void Cyclotomic::reduce() {
  trim(c_);
  if (order_ == 0) {
    if (c_.size() > 1) throw Error("Cyclotomic: non-constant value without an order");
    return;
  }
  const ZPoly& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  if (c_.size() <= deg) return;
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (c_[k] == 0) continue;
    const mpq_class t = c_[k];
    const std::size_t s = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) c_[s + j] -= t * phi.coeffs()[j];
  }
  c_.resize(deg);
  trim(c_);
}

int Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == 0) return b.order_;
  if (b.order_ == 0 || a.order_ == b.order_) return a.order_;
  throw FieldMismatch("cyclotomic values of orders " + std::to_string(a.order_) + " and " +
                      std::to_string(b.order_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r;
  r.order_ = Cyclotomic::common_order(a, b);
  r.c_ = a.c_;
  if (b.c_.size() > r.c_.size()) r.c_.resize(b.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  trim(r.c_);
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r;
  r.order_ = Cyclotomic::common_order(a, b);
  r.c_ = mul(a.c_, b.c_);
  r.reduce();
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::common_order(a, b);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a cyclotomic field");
  if (is_rational()) return Cyclotomic(1 / c_[0], order_);
  // Extended Euclid: find u with u*a = 1 mod Φ.
  QPoly r0 = phi_q(order_), r1 = c_;
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly quo, rem;
    divmod(r0, r1, quo, rem);
    QPoly s2 = sub(s0, mul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error("Cyclotomic::inverse: not invertible modulo Φ");
  const mpq_class inv = 1 / r1[0];
  for (auto& x : s1) x *= inv;
  return {std::move(s1), order_};
}

Cyclotomic Cyclotomic::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(mpq_class(1), order_), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    mpq_class a = abs(c);
    std::string term;
    if (k == 0) {
      term = a.get_str();
    } else {
      if (a != 1) term = a.get_str() + "*";
      term += "z";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace qpf
