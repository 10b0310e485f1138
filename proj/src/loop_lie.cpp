#include "jvoa/loop_lie.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "jvoa/errors.hpp"

namespace jvoa {

void GenCombination::add(const Generator& g, const Rational& c) {
  if (c == 0) return;
  auto& slot = terms_[g];
  slot += c;
  if (slot == 0) terms_.erase(g);
}

GenCombination& GenCombination::operator+=(const GenCombination& other) {
  for (const auto& [g, c] : other.terms_) add(g, c);
  k_ += other.k_;
  return *this;
}

GenCombination& GenCombination::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    k_ = 0;
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  k_ *= c;
  return *this;
}

SignedGenerator LoopAlgebra::canonicalize(int a, int m, int b, int n) const {
  space_.check_index(a);
  space_.check_index(b);
  int sign = 1;
  if (std::pair(n, b) < std::pair(m, a)) {
    std::swap(a, b);
    std::swap(m, n);
    sign = epsilon();
  }
  if (family() == Family::C && a == b && m == n) return {{m, a, n, b}, 0};
  return {{m, a, n, b}, sign};
}

GenCombination LoopAlgebra::element(int a, int m, int b, int n, const Rational& c) const {
  GenCombination x;
  x.add(canonicalize(a, m, b, n), c);
  return x;
}

int LoopAlgebra::mode_pairing(int a, int m, int b, int n) const {
  if (m + n != 0 || m == 0) return 0;
  return m * space_.pairing(a, b);
}

void LoopAlgebra::add_raw(GenCombination& out, const Rational& coef, int e, int r, int f, int s) const {
  if (coef == 0) return;
  // type C: e(r)f(s) = L_{e,f}(r,s) + 1/2 |r| delta <e,f> K
  // type B: e(r)f(s) = 2 L_{e,f}(r,s) + 1/2 |r| delta (e,f) K
  const Rational lcoef = family() == Family::B ? Rational(2) : Rational(1);
  out.add(canonicalize(e, r, f, s), coef * lcoef);
  if (r + s == 0 && r != 0) out.add_k(coef * make_rational(std::abs(r) * space_.pairing(e, f), 2));
}

GenCombination LoopAlgebra::bracket(const Generator& x, const Generator& y) const {
  GenCombination out;
  const int a = x.a, m = x.m, b = x.b, n = x.n;
  const int u = y.a, p = y.m, v = y.b, q = y.n;
  const int bu = mode_pairing(b, n, u, p), au = mode_pairing(a, m, u, p);
  const int bv = mode_pairing(b, n, v, q), av = mode_pairing(a, m, v, q);
  if (family() == Family::C) {
    const int s = variant_ == BracketVariant::Definition ? 1 : -1;
    add_raw(out, bu, a, m, v, q);
    add_raw(out, -au, b, n, v, q);
    add_raw(out, s * bv, u, p, a, m);
    add_raw(out, -s * av, u, p, b, n);
  } else {
    const Rational quarter = make_rational(1, 4);
    add_raw(out, quarter * bu, a, m, v, q);
    add_raw(out, quarter * au, b, n, v, q);
    add_raw(out, quarter * bv, u, p, a, m);
    add_raw(out, quarter * av, u, p, b, n);
  }
  return out;
}

GenCombination LoopAlgebra::bracket(const GenCombination& x, const GenCombination& y) const {
  GenCombination out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) {
      auto t = bracket(gx, gy);
      t *= cx * cy;
      out += t;
    }
  return out;
}

SignedGenerator LoopAlgebra::adjoint(const Generator& x) const { return canonicalize(x.a, -x.m, x.b, -x.n); }

GenCombination LoopAlgebra::adjoint(const GenCombination& x) const {
  GenCombination out;
  for (const auto& [g, c] : x.terms()) out.add(adjoint(g), c);
  out.add_k(x.k_coeff());
  return out;
}

SignedGenerator LoopAlgebra::transpose(const Generator& x) const { return canonicalize(x.b, -x.n, x.a, -x.m); }

std::string LoopAlgebra::to_string(const Generator& g) const {
  std::ostringstream os;
  os << "L[" << space_.label(g.a) << "," << space_.label(g.b) << "](" << g.m << "," << g.n << ")";
  return os.str();
}

std::string LoopAlgebra::to_string(const GenCombination& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << name;
  };
  for (const auto& [g, c] : x.terms()) emit(c, to_string(g));
  if (x.k_coeff() != 0) emit(x.k_coeff(), "K");
  return os.str();
}

}  // namespace jvoa
