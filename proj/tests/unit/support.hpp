#pragma once

#include <random>
#include <vector>

#include "jvoa/rpoly.hpp"

namespace jvoa::fixtures {

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long den_max = 4) {
  std::uniform_int_distribution<long> num(-span, span), den(1, den_max);
  return make_rational(num(rng), den(rng));
}

inline RPoly random_poly(std::mt19937_64& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng);
  return RPoly(std::move(c));
}

}  // namespace jvoa::fixtures
