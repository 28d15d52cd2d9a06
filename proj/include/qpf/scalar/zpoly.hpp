#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qpf {

/// Dense polynomial in ℤ[q], coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  ZPoly(long c);  // NOLINT(google-explicit-constructor)
  static ZPoly monomial(const mpz_class& c, int k);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int k) const;
  const mpz_class& lc() const { return c_.back(); }
  int low_order() const;  // index of the lowest nonzero coefficient

  ZPoly mul_q_pow(int k) const;  // times q^k, k >= 0
  ZPoly div_q_pow(int k) const;  // divide by q^k; the low k coefficients must vanish
  mpz_class content() const;     // positive gcd of the coefficients (0 for zero)
  ZPoly primitive_part() const;  // keeps the sign of lc

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const mpz_class& c);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly divexact(const mpz_class& c) const;
  // Exact quotient a / b in ℤ[q]; throws if b does not divide a.
  static ZPoly divexact(const ZPoly& a, const ZPoly& b);
  // gcd in ℤ[q] including content, normalized to positive leading coefficient.
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

  mpq_class eval(const mpq_class& x) const;
  // "c*q^k + ..." in descending degree, var is the variable name.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace qpf
