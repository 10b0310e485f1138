#include "jvoa/rpoly.hpp"

#include <algorithm>
#include <sstream>

#include "jvoa/errors.hpp"

namespace jvoa {

RPoly::RPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RPoly::RPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RPoly RPoly::monomial(const Rational& c, std::size_t power) {
  RPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = c;
  return p;
}

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

std::size_t RPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

Rational RPoly::evaluate_at(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RPoly& RPoly::operator+=(const RPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  RPoly p;
  p.coeffs_ = std::move(out);
  p.trim();
  return p;
}

RPoly& RPoly::operator*=(const RPoly& other) {
  *this = *this * other;
  return *this;
}

RPoly& RPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RPoly RPoly::operator-() const {
  RPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

std::pair<RPoly, RPoly> RPoly::divmod(const RPoly& num, const RPoly& den) {
  if (den.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  RPoly rem = num;
  if (rem.degree() < den.degree()) return {RPoly(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - den.degree()) + 1, Rational(0));
  const Rational lead_inv = 1 / den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - den.degree());
    Rational factor = rem.leading() * lead_inv;
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= factor * den.coeffs_[i];
    rem.trim();
  }
  return {RPoly(std::move(quot)), rem};
}

RPoly RPoly::exact_quotient(const RPoly& num, const RPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

RPoly RPoly::gcd(RPoly a, RPoly b) {
  while (!b.is_zero()) {
    auto rem = divmod(a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return a * (1 / a.leading());
}

RPoly RPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RPoly(std::move(out));
}

std::string RPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "r";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::vector<std::string> RPoly::to_fraction_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_fraction_string(c));
  return out;
}

RPoly RPoly::from_fraction_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_rational(s));
  return RPoly(std::move(v));
}

std::set<Integer> integer_roots(const RPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("every integer is a root of the zero polynomial");
  std::set<Integer> roots;
  const std::size_t val = p.valuation();
  if (val > 0) roots.insert(0);

  // Strip the r^val factor and repeated factors; integer roots are unchanged.
  std::vector<Rational> shifted(p.coefficients().begin() + static_cast<long>(val), p.coefficients().end());
  RPoly q(std::move(shifted));
  if (q.degree() >= 1) q = RPoly::exact_quotient(q, RPoly::gcd(q, q.derivative()));
  if (q.degree() < 1) return roots;

  // Primitive integer form.
  Integer lcm_den = 1;
  for (const auto& c : q.coefficients()) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  std::vector<Integer> ints;
  for (const auto& c : q.coefficients()) ints.push_back(Integer(c * Rational(lcm_den)));
  Integer content = 0;
  for (const auto& c : ints) content = gcd(content, c);
  for (auto& c : ints) c /= content;

  // Cauchy bound: |x| <= 1 + max |a_i / a_n|.
  const Integer& lead = ints.back();
  Integer bound = 0;
  for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
    Integer a = abs(ints[i]);
    Integer b = abs(lead);
    Integer ceil_div = (a + b - 1) / b;
    if (ceil_div > bound) bound = ceil_div;
  }
  bound += 1;
  const Integer constant = abs(ints.front());  // nonzero: r does not divide q
  if (bound > constant) bound = constant;
  if (bound > Integer(100000000)) throw Error("integer root bound too large to screen");

  auto is_root = [&](const Integer& x) {
    Integer acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * x + *it;
    return acc == 0;
  };
  for (Integer x = 1; x <= bound; ++x) {
    if (constant % x != 0) continue;
    if (is_root(x)) roots.insert(x);
    if (is_root(-x)) roots.insert(-x);
  }
  return roots;
}

}  // namespace jvoa
