#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "jvoa/rational.hpp"
#include "jvoa/space.hpp"

namespace jvoa {

/// Canonical quadratic generator L_{a,b}(m,n): the pairs (m,a) <= (n,b)
/// lexicographically.  Comparison is the PBW total order on (m, a, n, b).
struct Generator {
  int m = 0;
  int a = 0;
  int n = 0;
  int b = 0;

  auto operator<=>(const Generator&) const = default;

  /// Both modes strictly negative: a creation operator of L_-.
  bool is_creation() const { return m < 0 && n < 0; }
  /// Degree lowered by the generator, i.e. m + n (creation generators raise).
  int mode_sum() const { return m + n; }
};

/// sign is +1, -1, or 0 (0 for the vanishing type C diagonal).
struct SignedGenerator {
  Generator gen;
  int sign = 0;

  bool is_zero() const { return sign == 0; }
};

/// Finite linear combination of canonical generators plus a K coefficient.
class GenCombination {
 public:
  const std::map<Generator, Rational>& terms() const { return terms_; }
  const Rational& k_coeff() const { return k_; }
  bool is_zero() const { return terms_.empty() && k_ == 0; }

  void add(const Generator& g, const Rational& c);
  void add(const SignedGenerator& g, const Rational& c) {
    if (!g.is_zero()) add(g.gen, c * g.sign);
  }
  void add_k(const Rational& c) { k_ += c; }

  GenCombination& operator+=(const GenCombination& other);
  GenCombination& operator*=(const Rational& c);
  friend GenCombination operator-(GenCombination x) { return x *= -1; }
  friend bool operator==(const GenCombination&, const GenCombination&) = default;

 private:
  std::map<Generator, Rational> terms_;
  Rational k_ = 0;
};

/// Debug switch for the two printed forms of the type C commutator: the
/// definition-level pattern (+(b,v)ua - (a,v)ub) or the displayed variant
/// with the last two signs flipped.
enum class BracketVariant { Definition, Displayed };

/// The loop algebra over a B or C space.
class LoopAlgebra {
 public:
  explicit LoopAlgebra(SpaceSpec space, BracketVariant variant = BracketVariant::Definition)
      : space_(space), variant_(variant) {}

  const SpaceSpec& space() const { return space_; }
  Family family() const { return space_.family(); }
  /// +1 for type B (symmetric), -1 for type C (antisymmetric).
  int epsilon() const { return space_.family() == Family::B ? 1 : -1; }

  SignedGenerator canonicalize(int a, int m, int b, int n) const;
  /// c * L_{a,b}(m,n) as a combination, sign absorbed.
  GenCombination element(int a, int m, int b, int n, const Rational& c = 1) const;

  GenCombination bracket(const Generator& x, const Generator& y) const;
  GenCombination bracket(const GenCombination& x, const GenCombination& y) const;

  /// Anti-involution used by the contravariant form:
  /// L_{a,b}(m,n) -> L_{a,b}(-m,-n), K -> K.
  SignedGenerator adjoint(const Generator& x) const;
  GenCombination adjoint(const GenCombination& x) const;

  /// The literal transpose L_{a,b}(m,n) -> L_{b,a}(-n,-m). Kept for comparison;
  /// for type C it is not an anti-automorphism.
  SignedGenerator transpose(const Generator& x) const;

  /// "L[psi1,psi1*](1,-1)"
  std::string to_string(const Generator& g) const;
  std::string to_string(const GenCombination& x) const;

 private:
  // Adds coef * (raw quadratic e(r) f(s)) rewritten in the L basis.
  void add_raw(GenCombination& out, const Rational& coef, int e, int r, int f, int s) const;
  // m <a, b> delta_{m+n,0}: the pairing of a(m) with b(n).
  int mode_pairing(int a, int m, int b, int n) const;

  SpaceSpec space_;
  BracketVariant variant_;
};

}  // namespace jvoa
