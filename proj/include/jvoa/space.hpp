#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jvoa/rational.hpp"

namespace jvoa {

/// SymplecticC: W with basis psi_1..psi_n, psi*_1..psi*_n (indices 0..n-1,
/// then n..2n-1) and <psi*_i, psi_j> = delta_ij.
/// OrthogonalB: h with orthonormal basis e_1..e_d.
enum class Family { B, C };

std::string_view family_name(Family f);
Family parse_family(std::string_view text);

class SpaceSpec {
 public:
  /// Throws InvalidSpace for odd or nonpositive dimension, and for dim 2
  /// unless allow_dim_2 is set.
  static SpaceSpec symplectic(int dim, bool allow_dim_2 = false);
  static SpaceSpec orthogonal(int dim);
  static SpaceSpec make(Family family, int dim, bool allow_dim_2 = false);

  Family family() const { return family_; }
  int dim() const { return dim_; }
  /// n for SymplecticC; d for OrthogonalB.
  int rank() const { return family_ == Family::C ? dim_ / 2 : dim_; }
  bool allow_dim_2() const { return allow_dim_2_; }

  /// <a,b> (skew) for SymplecticC, (a,b) for OrthogonalB. Returns -1, 0 or 1.
  int pairing(int a, int b) const;
  Rational pairing_q(int a, int b) const { return pairing(a, b); }
  void check_index(int a) const;

  /// "psi1", "psi1*", "e3".
  std::string label(int a) const;
  /// Index shared by psi_i and psi*_i (type C); identity for type B.
  int particle(int a) const { return family_ == Family::C ? a % rank() : a; }
  int psi(int i) const { return i; }
  int psi_star(int i) const { return rank() + i; }

  friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
    return a.family_ == b.family_ && a.dim_ == b.dim_;
  }

 private:
  SpaceSpec(Family f, int dim, bool allow) : family_(f), dim_(dim), allow_dim_2_(allow) {}

  Family family_;
  int dim_;
  bool allow_dim_2_;
};

}  // namespace jvoa
