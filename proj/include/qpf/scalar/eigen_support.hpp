#pragma once

#include <Eigen/Core>
#include <ostream>

#include "qpf/scalar/cyclotomic.hpp"
#include "qpf/scalar/ratfunc.hpp"
#include "qpf/scalar/rational.hpp"

namespace qpf::detail {

template <class F>
struct ExactNumTraits : Eigen::GenericNumTraits<F> {
  using Real = F;
  using NonInteger = F;
  using Nested = F;
  using Literal = F;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace qpf::detail

namespace qpf {
inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
}  // namespace qpf

namespace Eigen {
template <>
struct NumTraits<qpf::RatFunc> : qpf::detail::ExactNumTraits<qpf::RatFunc> {};
template <>
struct NumTraits<qpf::Cyclotomic> : qpf::detail::ExactNumTraits<qpf::Cyclotomic> {};
template <>
struct NumTraits<qpf::Rational> : qpf::detail::ExactNumTraits<qpf::Rational> {};
}  // namespace Eigen
