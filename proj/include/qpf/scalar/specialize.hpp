#pragma once

#include <variant>

#include "qpf/scalar/cyclotomic.hpp"
#include "qpf/scalar/ratfunc.hpp"
#include "qpf/scalar/rational.hpp"

namespace qpf {

// Evaluation homomorphisms out of ℚ(q). Both throw SingularSpecialization
// when the denominator vanishes at the point.
Rational specialize_numeric(const RatFunc& s, const mpq_class& value);
Cyclotomic specialize_root(const RatFunc& s, int order);

/// Image of s under q -> target (target must not be GenericQ).
template <class G>
G specialize_to(const RatFunc& s, const FieldSpec& target);
template <>
Rational specialize_to<Rational>(const RatFunc& s, const FieldSpec& target);
template <>
Cyclotomic specialize_to<Cyclotomic>(const RatFunc& s, const FieldSpec& target);

std::variant<Rational, Cyclotomic> specialize(const RatFunc& s, const FieldSpec& target);

}  // namespace qpf
