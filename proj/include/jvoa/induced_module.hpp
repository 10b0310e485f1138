#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "jvoa/loop_lie.hpp"
#include "jvoa/rpoly.hpp"

namespace jvoa {

/// Sorted multiset of creation generators; the empty monomial is v_r.
using PBWMonomial = std::vector<Generator>;

int monomial_degree(const PBWMonomial& mono);
PBWMonomial insert_factor(PBWMonomial mono, const Generator& g);

/// Sparse Q[r]-linear combination of PBW monomials applied to v_r.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector vacuum() { return basis_vector({}); }
  static ModuleVector basis_vector(const PBWMonomial& mono, const RPoly& c = RPoly(1));

  const std::map<PBWMonomial, RPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RPoly coefficient(const PBWMonomial& mono) const;

  void add(const PBWMonomial& mono, const RPoly& c);
  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector& operator*=(const RPoly& c);
  ModuleVector& operator*=(const Rational& c);
  friend ModuleVector operator+(ModuleVector x, const ModuleVector& y) { return x += y; }
  friend ModuleVector operator-(ModuleVector x, const ModuleVector& y) { return x -= y; }
  friend ModuleVector operator*(const RPoly& c, ModuleVector x) { return x *= c; }
  friend ModuleVector operator*(const Rational& c, ModuleVector x) { return x *= c; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  /// Largest monomial degree present (-1 for zero).
  int max_degree() const;
  bool is_homogeneous() const;
  ModuleVector component(int degree) const;
  /// Coefficients specialized at r = r0 (zero coefficients dropped).
  std::map<PBWMonomial, Rational> evaluate_at(const Rational& r0) const;

 private:
  std::map<PBWMonomial, RPoly> terms_;
};

/// The induced module M_r with v_r killed by B_+ and K v_r = r v_r.
class InducedModule {
 public:
  explicit InducedModule(LoopAlgebra algebra) : algebra_(std::move(algebra)) {}

  const LoopAlgebra& algebra() const { return algebra_; }
  const SpaceSpec& space() const { return algebra_.space(); }

  ModuleVector apply(const Generator& g, const ModuleVector& v) const;
  ModuleVector apply(const SignedGenerator& g, const ModuleVector& v) const;
  ModuleVector apply(const GenCombination& x, const ModuleVector& v) const;
  ModuleVector apply_k(const ModuleVector& v) const { return RPoly::r() * v; }
  /// Action on a single basis monomial (memoized).
  const ModuleVector& apply(const Generator& g, const PBWMonomial& mono) const;

  /// Canonical creation generators of degree exactly k, in PBW order.
  std::vector<Generator> creation_generators(int k) const;
  /// PBW basis of the degree-d component, sorted.
  std::vector<PBWMonomial> basis(int d) const;
  std::size_t graded_dimension(int d) const { return basis(d).size(); }

  std::string to_string(const PBWMonomial& mono) const;
  std::string to_string(const ModuleVector& v) const;

  std::size_t cache_size() const;

 private:
  ModuleVector compute(const Generator& g, const PBWMonomial& mono) const;

  LoopAlgebra algebra_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Generator, PBWMonomial>, ModuleVector> cache_;
};

std::size_t graded_dimension(const SpaceSpec& space, int d);

struct IdealReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> witnesses;
};

/// L_{a,b}(0,m) v = 0 for every basis vector of degree <= D, every label
/// pair, and |m| <= D + 1.
IdealReport ideal_annihilation_check(const InducedModule& module, int max_degree);

}  // namespace jvoa
