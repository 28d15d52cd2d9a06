#pragma once

#include "qpf/errors.hpp"
#include "qpf/scalar/cyclotomic.hpp"
#include "qpf/scalar/eigen_support.hpp"
#include "qpf/scalar/field.hpp"
#include "qpf/scalar/ratfunc.hpp"
#include "qpf/scalar/rational.hpp"
#include "qpf/scalar/specialize.hpp"
#include "qpf/scalar/zpoly.hpp"

// Instantiates X for every supported base field.
#define QPF_FOR_EACH_FIELD(X) \
  X(::qpf::RatFunc)           \
  X(::qpf::Cyclotomic)        \
  X(::qpf::Rational)

static_assert(qpf::ExactField<qpf::RatFunc>);
static_assert(qpf::ExactField<qpf::Cyclotomic>);
static_assert(qpf::ExactField<qpf::Rational>);
