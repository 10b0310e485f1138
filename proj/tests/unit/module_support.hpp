#pragma once

#include <random>

#include "jvoa/induced_module.hpp"
#include "support.hpp"

namespace jvoa::fixtures {

/// Random combination of (up to `terms`) degree-d basis vectors with constant coefficients.
inline ModuleVector random_vector(const InducedModule& module, int d, std::mt19937_64& rng, int terms = 3) {
  const auto basis = module.basis(d);
  ModuleVector v;
  if (basis.empty()) return v;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  while (v.is_zero())
    for (int k = 0; k < terms; ++k) v.add(basis[pick(rng)], random_rational(rng));
  return v;
}

}  // namespace jvoa::fixtures
