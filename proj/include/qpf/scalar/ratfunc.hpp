#pragma once

#include <string>
#include <string_view>

#include "qpf/scalar/field.hpp"
#include "qpf/scalar/zpoly.hpp"

namespace qpf {

/// Element of ℚ(q), kept in canonical form q^shift · num/den where num and den
/// are coprime in ℤ[q], neither is divisible by q, and lc(den) > 0.
///
/// numerator()/denominator() fold the power of q back in, which gives the
/// canonical integer-polynomial fraction.
class RatFunc {
 public:
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::GenericQ;

  RatFunc() = default;
  RatFunc(long c);                // NOLINT(google-explicit-constructor)
  RatFunc(const mpz_class& c);    // NOLINT(google-explicit-constructor)
  explicit RatFunc(const mpq_class& c);

  static RatFunc q() { return q_pow(1); }
  static RatFunc q_pow(int k);
  static RatFunc generator(const FieldSpec& spec);
  static RatFunc parse(std::string_view text, const FieldSpec& spec = FieldSpec::generic());

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  // Laurent polynomial in q (denominator a power of q).
  bool is_laurent() const { return den_.is_one(); }

  ZPoly numerator() const;
  ZPoly denominator() const;
  int shift() const { return shift_; }
  const ZPoly& reduced_num() const { return num_; }
  const ZPoly& reduced_den() const { return den_; }

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  friend RatFunc rf_normalize(const ZPoly& num, const ZPoly& den);
  static RatFunc make(int shift, ZPoly num, ZPoly den);
  int shift_ = 0;
  ZPoly num_;
  ZPoly den_ = ZPoly(1);
};

/// Canonical form of num/den.
RatFunc rf_normalize(const ZPoly& num, const ZPoly& den);

}  // namespace qpf
