#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jvoa/rational.hpp"
#include "jvoa/space.hpp"

namespace jvoa {

/// Type A: ordered tensors a (x) b.  Type B: L_{a,b} = a(x)b + b(x)a.
/// Type C: L_{a,b} = a(x)b - b(x)a.
enum class JordanType { A, B, C };

std::string_view jordan_type_name(JordanType t);

class JordanElement {
 public:
  using Key = std::pair<int, int>;

  JordanElement(JordanType type, SpaceSpec space);

  /// c * L_{a,b}, canonicalized (type B: a <= b; type C: a < b with the
  /// sign absorbed, L_{a,a} = 0; type A: no symmetry).
  static JordanElement generator(JordanType type, const SpaceSpec& space, int a, int b,
                                 const Rational& c = 1);

  JordanType type() const { return type_; }
  const SpaceSpec& space() const { return space_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int a, int b) const;

  void add(int a, int b, const Rational& c);
  JordanElement& operator+=(const JordanElement& other);
  JordanElement& operator-=(const JordanElement& other);
  JordanElement& operator*=(const Rational& c);
  friend JordanElement operator+(JordanElement x, const JordanElement& y) { return x += y; }
  friend JordanElement operator-(JordanElement x, const JordanElement& y) { return x -= y; }
  friend JordanElement operator*(const Rational& c, JordanElement x) { return x *= c; }
  friend bool operator==(const JordanElement& x, const JordanElement& y) {
    return x.type_ == y.type_ && x.space_ == y.space_ && x.terms_ == y.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const JordanElement& other) const;

  JordanType type_;
  SpaceSpec space_;
  std::map<Key, Rational> terms_;
};

/// Bilinear extension of the explicit product formulas for types A, B, C.
/// Throws FamilyMismatch when x and y live in different algebras.
JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

/// {1/2 L_{e_i,e_i}} for type B, {L_{psi_i,psi*_i}} for type C.
/// The algebra type follows the space family.
std::vector<JordanElement> jordan_frame(const SpaceSpec& space);
/// Same, with the algebra type explicit; throws UnsupportedFamily for type A
/// and FamilyMismatch when the type disagrees with the space.
std::vector<JordanElement> jordan_frame(JordanType type, const SpaceSpec& space);

/// Sum of the frame: the unit of the algebra.
JordanElement jordan_identity(const SpaceSpec& space);

/// All canonical generators L_{a,b} of the type B/C algebra of `space`.
std::vector<JordanElement> jordan_basis(const SpaceSpec& space);

JordanType jordan_type_of(const SpaceSpec& space);

}  // namespace jvoa
