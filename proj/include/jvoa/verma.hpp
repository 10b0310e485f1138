#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jvoa/rational.hpp"

namespace jvoa {

/// Coefficients on eps_1..eps_N.
using Weight = std::vector<Rational>;

Rational inner(const Weight& x, const Weight& y);
Weight coroot(const Weight& beta);

/// D_N with positive roots eps_j +- eps_i (i < j) and parabolic subsystem
/// {+-(eps_i - eps_j)}.
class RootDatumDN {
 public:
  explicit RootDatumDN(int N);

  int rank() const { return N_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Positive roots of the parabolic subsystem (eps_j - eps_i, i < j).
  const std::vector<Weight>& parabolic_positive() const { return parabolic_; }
  /// Positive roots outside the parabolic subsystem: eps_k + eps_l.
  const std::vector<Weight>& nilradical() const { return nilradical_; }
  std::vector<Weight> simple_roots() const;

  Weight eps(int i) const;  // 1-based
  Weight rho() const;       // half sum of positive roots
  Weight rho_closed_form() const;
  /// lambda = -(r/2) sum eps_i.
  Weight lambda(const Rational& r) const;

 private:
  int N_;
  std::vector<Weight> positive_, parabolic_, nilradical_;
};

/// <lambda + rho, (eps_k + eps_l)^vee> from the root datum; throws IndexOutOfRange
/// unless 1 <= k < l <= N.
Rational coroot_pairing(int N, const Rational& r, int k, int l);

enum class Verdict { Simple, ReducibleWitness, InconclusiveIrregular };
std::string_view verdict_name(Verdict v);

struct PairingRow {
  int k = 0;
  int l = 0;
  Rational value;
};

struct VermaReport {
  int N = 0;
  Rational r;
  Verdict verdict = Verdict::Simple;
  std::optional<std::pair<int, int>> witness;       // eps_k + eps_l
  std::vector<std::pair<int, int>> positive_integer;  // all (k,l) with a pairing in Z_{>0}
  bool regular_simple = true;                       // against simple roots
  bool regular_all = true;                          // against all roots
  std::vector<PairingRow> pairings;
  std::string note;
};

VermaReport jantzen_verdict(int N, const Rational& r);

/// Witness existence is monotone along the ranks 2..N, and the pairing table
/// at each rank restricts the next one. Requires N >= 3.
bool filtration_consistency(int N, const Rational& r);

}  // namespace jvoa
