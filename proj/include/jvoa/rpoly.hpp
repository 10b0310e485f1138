#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jvoa/rational.hpp"

namespace jvoa {

/// Univariate polynomial over Q in the central parameter r.
///
/// Stored densely, lowest degree first, with no trailing zero coefficient;
/// the zero polynomial has no coefficients at all.
class RPoly {
 public:
  RPoly() = default;
  RPoly(const Rational& constant);  // NOLINT: implicit scalar promotion
  RPoly(long constant) : RPoly(Rational(constant)) {}  // NOLINT
  explicit RPoly(std::vector<Rational> coefficients);

  static RPoly r() { return monomial(1, 1); }
  static RPoly monomial(const Rational& c, std::size_t power);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }
  // Lowest power with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;

  Rational evaluate_at(const Rational& x) const;

  RPoly& operator+=(const RPoly& other);
  RPoly& operator-=(const RPoly& other);
  RPoly& operator*=(const RPoly& other);
  RPoly& operator*=(const Rational& c);

  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend RPoly operator*(RPoly a, const Rational& c) { return a *= c; }
  friend RPoly operator*(const Rational& c, RPoly a) { return a *= c; }
  RPoly operator-() const;

  friend bool operator==(const RPoly& a, const RPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const RPoly& a, const RPoly& b) { return !(a == b); }

  /// Quotient and remainder of polynomial long division. Throws ZeroPolynomial
  /// when dividing by zero.
  static std::pair<RPoly, RPoly> divmod(const RPoly& num, const RPoly& den);
  /// Division that must be exact; throws Error otherwise.
  static RPoly exact_quotient(const RPoly& num, const RPoly& den);
  static RPoly gcd(RPoly a, RPoly b);  // monic, or zero
  RPoly derivative() const;

  // "-4*r", "r^2 - 3*r + 2", "0"
  std::string to_string() const;
  // "num/den" strings, lowest degree first
  std::vector<std::string> to_fraction_strings() const;
  static RPoly from_fraction_strings(const std::vector<std::string>& coeffs);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Integer roots of p by rational-root screening of the primitive integer
/// form of its squarefree part. Throws ZeroPolynomial for p = 0.
std::set<Integer> integer_roots(const RPoly& p);

}  // namespace jvoa
