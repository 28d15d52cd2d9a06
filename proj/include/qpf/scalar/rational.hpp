#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qpf/scalar/field.hpp"

namespace qpf {

/// Element of ℚ, used when q is specialized to a nonzero rational number.
class Rational {
 public:
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::NumericQ;

  Rational() = default;
  Rational(long c) : v_(c) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational generator(const FieldSpec& spec);
  static Rational parse(std::string_view text, const FieldSpec& spec);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const;
  Rational pow(int k) const;
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_ = 0;
};

}  // namespace qpf
