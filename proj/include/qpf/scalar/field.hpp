#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace qpf {

/// The base field k, with q in k^x.
struct FieldSpec {
  enum class Kind { GenericQ, RootOfUnity, NumericQ };

  Kind kind = Kind::GenericQ;
  int order = 0;        // RootOfUnity only
  mpq_class value = 0;  // NumericQ only

  static FieldSpec generic() { return {}; }
  static FieldSpec root_of_unity(int l);
  static FieldSpec numeric(const mpq_class& v);

  // "generic", "root-of-unity(3)", "q=5/3"
  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::GenericQ: return true;
      case Kind::RootOfUnity: return a.order == b.order;
      case Kind::NumericQ: return a.value == b.value;
    }
    return false;
  }
};

template <class F>
concept ExactField = std::regular<F> && requires(const F a, const F b, int k, const FieldSpec& s,
                                                 std::string_view text) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.pow(k) } -> std::same_as<F>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { F::generator(s) } -> std::same_as<F>;
  { F::parse(text, s) } -> std::same_as<F>;
  { F::kind } -> std::convertible_to<FieldSpec::Kind>;
};

// Checks that spec describes the field of F.
template <class F>
void require_kind(const FieldSpec& spec);

}  // namespace qpf
