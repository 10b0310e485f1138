#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jvoa/induced_module.hpp"
#include "jvoa/loop_lie.hpp"

namespace jvoa {

/// A fermion mode a(m) as (mode, basis index); ordered by mode, then index.
using FermionMode = std::pair<int, int>;

/// Wedge product f_1 f_2 ... f_k . 1 of creation modes, strictly increasing.
using FermionMonomial = std::vector<FermionMode>;
using FermionVector = std::map<FermionMonomial, Rational>;

int fermion_degree(const FermionMonomial& mono);
void fermion_add(FermionVector& v, const FermionMonomial& mono, const Rational& c);

/// Symplectic-fermion Fock space over a type C space: the r = 1 oracle.
class FermionFock {
 public:
  explicit FermionFock(SpaceSpec space);

  const SpaceSpec& space() const { return space_; }

  /// {a(m), b(n)} = m <a,b> delta_{m+n,0}.
  Rational anticommutator(int a, int m, int b, int n) const;

  /// a(m) on v: wedge insertion for m < 0, contraction for m > 0, zero for m = 0.
  FermionVector apply(int a, int m, const FermionVector& v) const;
  /// :a(m)b(n): with annihilators moved right (one sign per transposition).
  FermionVector quadratic(int a, int m, int b, int n, const FermionVector& v) const;
  FermionVector quadratic(const Generator& g, const FermionVector& v) const;
  FermionVector quadratic(const GenCombination& x, const FermionVector& v) const;  // K -> 1

  /// The module map M_1 -> Fock: v_r -> 1, PBW factors act by quadratic().
  FermionVector evaluate_at_r1(const ModuleVector& v) const;

  std::vector<FermionMonomial> basis(int d) const;
  std::size_t graded_dimension(int d) const;
  std::size_t even_graded_dimension(int d) const;

 private:
  SpaceSpec space_;
};

struct KernelRank {
  std::size_t pbw_dim = 0;
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;
};

/// Rank and nullity of evaluate_at_r1 on the degree-d component of M_1.
KernelRank kernel_rank(const InducedModule& module, const FermionFock& fock, int d);

/// Element of the Clifford algebra (zero modes quotiented out) written in
/// normally ordered words: creation modes ascending, then annihilation modes ascending.
class CliffordElement {
 public:
  using Word = std::vector<FermionMode>;

  static CliffordElement scalar(const Rational& c);
  /// :a(m)b(n): for the normal-ordering convention of FermionFock::quadratic.
  static CliffordElement quadratic(int a, int m, int b, int n);
  static CliffordElement quadratic(const GenCombination& x);  // K -> 1

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  /// Product, normally ordered via {x,y} contractions.
  static CliffordElement multiply(const FermionFock& fock, const CliffordElement& x, const CliffordElement& y);
  static CliffordElement commutator(const FermionFock& fock, const CliffordElement& x, const CliffordElement& y);

 private:
  void add_normal_ordered(const FermionFock& fock, Word w, const Rational& c);

  std::map<Word, Rational> terms_;
};

struct OracleReport {
  bool passed = true;
  std::size_t pairs = 0;
  std::vector<std::string> witnesses;
};

/// [Q(x), Q(y)] = Q([x, y]) with K -> 1 for every ordered pair of canonical
/// generators with both modes in [-mode_span, mode_span].
OracleReport bracket_oracle_check(const LoopAlgebra& algebra, const FermionFock& fock, int mode_span);

}  // namespace jvoa
