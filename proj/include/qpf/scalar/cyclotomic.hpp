#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qpf/scalar/field.hpp"
#include "qpf/scalar/zpoly.hpp"

namespace qpf {

/// The l-th cyclotomic polynomial Φ_l (cached).
const ZPoly& cyclotomic_polynomial(int l);

/// Element of ℚ(ζ_l): a polynomial in z of degree < φ(l), reduced modulo Φ_l
/// after every multiplication.
///
/// Rational constants carry order 0 until combined with a value of a definite
/// order; combining two different nonzero orders throws FieldMismatch.
class Cyclotomic {
 public:
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::RootOfUnity;

  Cyclotomic() = default;
  Cyclotomic(long c);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const mpq_class& c, int order = 0);
  Cyclotomic(std::vector<mpq_class> coeffs, int order);

  static Cyclotomic zeta(int l) { return zeta_pow(l, 1); }
  static Cyclotomic zeta_pow(int l, long k);
  static Cyclotomic generator(const FieldSpec& spec);
  static Cyclotomic parse(std::string_view text, const FieldSpec& spec);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(int k) const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  static int common_order(const Cyclotomic& a, const Cyclotomic& b);
  void reduce();
  int order_ = 0;
  std::vector<mpq_class> c_;
};

}  // namespace qpf
