#include "qpf/scalar/zpoly.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "qpf/errors.hpp"

namespace qpf {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

ZPoly ZPoly::monomial(const mpz_class& c, int k) {
  ZPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
  p.c_.back() = c;
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

int ZPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

ZPoly ZPoly::mul_q_pow(int k) const {
  if (k == 0 || is_zero()) return *this;
  ZPoly r;
  r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

ZPoly ZPoly::div_q_pow(int k) const {
  if (k == 0 || is_zero()) return *this;
  ZPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  return g == 1 ? *this : divexact(g);
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= c;
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::divexact(const mpz_class& c) const {
  ZPoly r = *this;
  for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return r;
}

namespace {

std::optional<ZPoly> try_divexact(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return ZPoly();
  if (b.is_constant()) {
    for (const auto& x : a.coeffs())
      if (!mpz_divisible_p(x.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    return a.divexact(b.lc());
  }
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.coeffs();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  std::vector<mpz_class> quo(static_cast<std::size_t>(a.degree() - db) + 1, mpz_class(0));
  for (int k = a.degree(); k >= db; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    const int s = k - db;
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<std::size_t>(s + j)].get_mpz_t(), t.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    quo[static_cast<std::size_t>(s)] = t;
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return ZPoly(std::move(quo));
}

}  // namespace

ZPoly ZPoly::divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  auto q = try_divexact(a, b);
  if (!q) throw Error("ZPoly::divexact: not divisible");
  return std::move(*q);
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b), multiplying by lc(b) only when needed.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.lc();
  while (!a.is_zero() && a.degree() >= db) {
    const mpz_class la = a.lc();
    const int s = a.degree() - db;
    a *= lb;
    a -= ZPoly::monomial(la, s) * b;
  }
  return a;
}

mpz_class max_norm(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

mpz_class eval_at(const ZPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * x + *it;
  return r;
}

// Heuristic gcd of primitive polynomials: gcd of the values at a large
// integer, read back in balanced base-ξ digits and verified by division.
std::optional<ZPoly> gcd_heuristic(const ZPoly& a, const ZPoly& b) {
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class ga = eval_at(a, xi), gb = eval_at(b, xi), g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    std::vector<mpz_class> digits;
    const mpz_class half = xi / 2;
    while (g != 0) {
      mpz_class d = g % xi;
      if (d > half) d -= xi;
      if (d < -half) d += xi;
      digits.push_back(d);
      g = (g - d) / xi;
    }
    ZPoly cand = ZPoly(std::move(digits)).primitive_part();
    if (!cand.is_zero() && try_divexact(a, cand) && try_divexact(b, cand)) return cand;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto positive = [](ZPoly p) { return p.lc() < 0 ? -p : p; };
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return ZPoly({c});
  ZPoly x = a.divexact(ca), y = b.divexact(cb);
  if (auto h = gcd_heuristic(x, y)) {
    ZPoly g = positive(*h);
    g *= c;
    return g;
  }
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
    if (!y.is_zero() && y.is_constant()) {
      x = ZPoly(1);
      break;
    }
  }
  x = positive(x.primitive_part());
  x *= c;
  return x;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += mpq_class(*it);
  }
  return r;
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    std::string term;
    if (k == 0) {
      term = a.get_str();
    } else {
      if (a != 1) term = a.get_str() + "*";
      term += var;
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
