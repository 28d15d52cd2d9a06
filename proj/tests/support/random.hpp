#pragma once

#include <random>

#include "qpf/scalar.hpp"

namespace qpf::testing {

inline ZPoly random_zpoly(std::mt19937& rng, int max_deg, int bound) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return ZPoly(std::move(c));
}

inline RatFunc random_ratfunc(std::mt19937& rng) {
  ZPoly den;
  while (den.is_zero()) den = random_zpoly(rng, 2, 4);
  std::uniform_int_distribution<int> sh(-2, 2);
  return rf_normalize(random_zpoly(rng, 3, 5), den) * RatFunc::q_pow(sh(rng));
}

inline Cyclotomic random_cyclotomic(std::mt19937& rng, int l) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
  std::vector<mpq_class> c(static_cast<std::size_t>(l));
  for (auto& x : c) x = mpq_class(coef(rng), den(rng));
  return {std::move(c), l};
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rational(mpq_class(num(rng), den(rng)));
}

}  // namespace qpf::testing
