#include "qpf/scalar/field.hpp"

#include "qpf/errors.hpp"
#include "qpf/scalar/cyclotomic.hpp"
#include "qpf/scalar/parse.hpp"
#include "qpf/scalar/ratfunc.hpp"
#include "qpf/scalar/rational.hpp"
#include "qpf/scalar/specialize.hpp"

namespace qpf {

FieldSpec FieldSpec::root_of_unity(int l) {
  if (l <= 1) throw Error("root of unity order must exceed 1, got " + std::to_string(l));
  FieldSpec s;
  s.kind = Kind::RootOfUnity;
  s.order = l;
  return s;
}

FieldSpec FieldSpec::numeric(const mpq_class& v) {
  if (v == 0) throw Error("numeric q must be nonzero");
  FieldSpec s;
  s.kind = Kind::NumericQ;
  s.value = v;
  s.value.canonicalize();
  return s;
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::GenericQ: return "generic";
    case Kind::RootOfUnity: return "root-of-unity(" + std::to_string(order) + ")";
    case Kind::NumericQ: return "q=" + value.get_str();
  }
  return "?";
}

template <class F>
void require_kind(const FieldSpec& spec) {
  if (spec.kind != F::kind) throw FieldMismatch("field " + spec.to_string() + " does not match the scalar type");
}

template void require_kind<RatFunc>(const FieldSpec&);
template void require_kind<Cyclotomic>(const FieldSpec&);
template void require_kind<Rational>(const FieldSpec&);

RatFunc RatFunc::parse(std::string_view text, const FieldSpec& spec) {
  require_kind<RatFunc>(spec);
  auto mk_int = [](const mpz_class& z) { return RatFunc(z); };
  auto mk_var = [](const std::string& name) -> std::optional<RatFunc> {
    if (name == "q") return RatFunc::q();
    return std::nullopt;
  };
  return detail::ScalarParser<RatFunc, decltype(mk_int), decltype(mk_var)>(text, mk_int, mk_var).run();
}

Cyclotomic Cyclotomic::parse(std::string_view text, const FieldSpec& spec) {
  require_kind<Cyclotomic>(spec);
  const int l = spec.order;
  auto mk_int = [l](const mpz_class& z) { return Cyclotomic(mpq_class(z), l); };
  auto mk_var = [l](const std::string& name) -> std::optional<Cyclotomic> {
    if (name == "z" || name == "q") return Cyclotomic::zeta(l);
    return std::nullopt;
  };
  return detail::ScalarParser<Cyclotomic, decltype(mk_int), decltype(mk_var)>(text, mk_int, mk_var).run();
}

Rational Rational::parse(std::string_view text, const FieldSpec& spec) {
  require_kind<Rational>(spec);
  auto mk_int = [](const mpz_class& z) { return Rational(mpq_class(z)); };
  auto mk_var = [&spec](const std::string& name) -> std::optional<Rational> {
    if (name == "q" && spec.kind == FieldSpec::Kind::NumericQ) return Rational(spec.value);
    return std::nullopt;
  };
  return detail::ScalarParser<Rational, decltype(mk_int), decltype(mk_var)>(text, mk_int, mk_var).run();
}

Rational Rational::generator(const FieldSpec& spec) {
  require_kind<Rational>(spec);
  return Rational(spec.value);
}

Rational Rational::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero in Q");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  mpq_class r = 1, b = v_;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return Rational(r);
}

Rational specialize_numeric(const RatFunc& s, const mpq_class& value) {
  if (value == 0) throw SingularSpecialization("cannot specialize q to 0");
  if (s.is_zero()) return Rational(0);
  mpq_class den = s.reduced_den().eval(value);
  if (den == 0)
    throw SingularSpecialization("denominator of " + s.to_string() + " vanishes at q=" + value.get_str());
  Rational qk = Rational(value).pow(s.shift());
  return Rational(mpq_class(s.reduced_num().eval(value) / den)) * qk;
}

namespace {

Cyclotomic eval_at_root(const ZPoly& p, int l) {
  std::vector<mpq_class> folded(static_cast<std::size_t>(l), mpq_class(0));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) folded[k % static_cast<std::size_t>(l)] += p.coeffs()[k];
  return {std::move(folded), l};
}

}  // namespace

Cyclotomic specialize_root(const RatFunc& s, int order) {
  if (order < 2) throw Error("root of unity order must exceed 1");
  if (s.is_zero()) return Cyclotomic(mpq_class(0), order);
  Cyclotomic den = eval_at_root(s.reduced_den(), order);
  if (den.is_zero())
    throw SingularSpecialization("denominator of " + s.to_string() + " vanishes at a primitive " +
                                 std::to_string(order) + "-th root of unity");
  return eval_at_root(s.reduced_num(), order) / den * Cyclotomic::zeta_pow(order, s.shift());
}

template <>
Rational specialize_to<Rational>(const RatFunc& s, const FieldSpec& target) {
  require_kind<Rational>(target);
  return specialize_numeric(s, target.value);
}

template <>
Cyclotomic specialize_to<Cyclotomic>(const RatFunc& s, const FieldSpec& target) {
  require_kind<Cyclotomic>(target);
  return specialize_root(s, target.order);
}

std::variant<Rational, Cyclotomic> specialize(const RatFunc& s, const FieldSpec& target) {
  switch (target.kind) {
    case FieldSpec::Kind::NumericQ: return specialize_numeric(s, target.value);
    case FieldSpec::Kind::RootOfUnity: return specialize_root(s, target.order);
    case FieldSpec::Kind::GenericQ: break;
  }
  throw Error("specialize: target must not be generic");
}

}  // namespace qpf
