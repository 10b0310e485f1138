#include "jvoa/jordan.hpp"

#include <sstream>

#include "jvoa/errors.hpp"

namespace jvoa {

std::string_view jordan_type_name(JordanType t) {
  switch (t) {
    case JordanType::A: return "A";
    case JordanType::B: return "B";
    case JordanType::C: return "C";
  }
  return "?";
}

JordanType jordan_type_of(const SpaceSpec& space) {
  return space.family() == Family::B ? JordanType::B : JordanType::C;
}

JordanElement::JordanElement(JordanType type, SpaceSpec space) : type_(type), space_(space) {
  if (type != JordanType::C && space.family() != Family::B)
    throw FamilyMismatch("type A and B Jordan algebras need an orthogonal space");
  if (type == JordanType::C && space.family() != Family::C)
    throw FamilyMismatch("type C Jordan algebra needs a symplectic space");
}

JordanElement JordanElement::generator(JordanType type, const SpaceSpec& space, int a, int b,
                                       const Rational& c) {
  JordanElement x(type, space);
  x.add(a, b, c);
  return x;
}

Rational JordanElement::coefficient(int a, int b) const {
  JordanElement probe(type_, space_);
  probe.add(a, b, 1);
  if (probe.is_zero()) return 0;
  const auto& [key, sign] = *probe.terms_.begin();
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : Rational(it->second * sign);
}

void JordanElement::add(int a, int b, const Rational& c) {
  space_.check_index(a);
  space_.check_index(b);
  if (c == 0) return;
  Rational coef = c;
  if (type_ != JordanType::A && a > b) {
    std::swap(a, b);
    if (type_ == JordanType::C) coef = -coef;
  }
  if (type_ == JordanType::C && a == b) return;
  auto& slot = terms_[{a, b}];
  slot += coef;
  if (slot == 0) terms_.erase({a, b});
}

void JordanElement::check_compatible(const JordanElement& other) const {
  if (type_ != other.type_ || !(space_ == other.space_))
    throw FamilyMismatch("Jordan elements from different algebras");
}

JordanElement& JordanElement::operator+=(const JordanElement& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
  return *this;
}

JordanElement& JordanElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string JordanElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* name = type_ == JordanType::A ? "Lt" : "L";
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << c.get_str() << ")*";
    os << name << "[" << space_.label(k.first) << "," << space_.label(k.second) << "]";
  }
  return os.str();
}

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
  if (x.type() != y.type() || !(x.space() == y.space()))
    throw FamilyMismatch("Jordan product of elements from different algebras");
  const auto& sp = x.space();
  JordanElement out(x.type(), sp);
  const Rational half = make_rational(1, 2);
  for (const auto& [k1, c1] : x.terms()) {
    const auto [a, b] = k1;
    for (const auto& [k2, c2] : y.terms()) {
      const auto [u, v] = k2;
      const Rational c = half * c1 * c2;
      const int bu = sp.pairing(b, u), bv = sp.pairing(b, v);
      const int au = sp.pairing(a, u), av = sp.pairing(a, v);
      switch (x.type()) {
        case JordanType::A:
          out.add(a, v, c * bu);
          out.add(u, b, c * av);
          break;
        case JordanType::B:
          out.add(a, v, c * bu);
          out.add(a, u, c * bv);
          out.add(b, v, c * au);
          out.add(b, u, c * av);
          break;
        case JordanType::C:
          out.add(a, v, c * bu);
          out.add(a, u, -c * bv);
          out.add(b, v, -c * au);
          out.add(b, u, c * av);
          break;
      }
    }
  }
  return out;
}

std::vector<JordanElement> jordan_frame(const SpaceSpec& space) {
  std::vector<JordanElement> frame;
  const auto type = jordan_type_of(space);
  for (int i = 0; i < space.rank(); ++i) {
    if (type == JordanType::B)
      frame.push_back(JordanElement::generator(type, space, i, i, make_rational(1, 2)));
    else
      frame.push_back(JordanElement::generator(type, space, space.psi(i), space.psi_star(i)));
  }
  return frame;
}

std::vector<JordanElement> jordan_frame(JordanType type, const SpaceSpec& space) {
  if (type == JordanType::A) throw UnsupportedFamily("type A carries no Jordan frame here");
  if (type != jordan_type_of(space)) throw FamilyMismatch("Jordan type does not match the space family");
  return jordan_frame(space);
}

JordanElement jordan_identity(const SpaceSpec& space) {
  JordanElement e(jordan_type_of(space), space);
  for (const auto& f : jordan_frame(space)) e += f;
  return e;
}

std::vector<JordanElement> jordan_basis(const SpaceSpec& space) {
  std::vector<JordanElement> basis;
  const auto type = jordan_type_of(space);
  for (int a = 0; a < space.dim(); ++a)
    for (int b = (type == JordanType::B ? a : a + 1); b < space.dim(); ++b)
      basis.push_back(JordanElement::generator(type, space, a, b));
  return basis;
}

}  // namespace jvoa
