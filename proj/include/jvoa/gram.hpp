#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "jvoa/induced_module.hpp"
#include "jvoa/linalg.hpp"

namespace jvoa {

/// Contravariant form <x, y>: the v_r-coefficient of adj(x) y, where a PBW
/// monomial X_1...X_k has adjoint tau(X_k)...tau(X_1) and <v_r, v_r> = 1.
RPoly pairing(const InducedModule& module, const PBWMonomial& x, const PBWMonomial& y);
RPoly pairing(const InducedModule& module, const ModuleVector& x, const ModuleVector& y);

struct GramMatrix {
  int degree = 0;
  std::vector<PBWMonomial> basis;
  PMatrix entries;

  bool is_symmetric() const;
};

GramMatrix gram_matrix(const InducedModule& module, int d);

struct GramAnalysis {
  int degree = 0;
  std::size_t dimension = 0;
  RPoly det;
  std::set<Integer> integer_roots;
  std::map<Rational, std::size_t> rank_at;
};

/// Throws ZeroPolynomial when the determinant vanishes identically.
GramAnalysis gram_analysis(const InducedModule& module, int d, const std::vector<Rational>& sample_points = {});
GramAnalysis gram_analysis(const GramMatrix& gram, const std::vector<Rational>& sample_points = {});

struct SingularVectors {
  int degree = 0;
  Rational r0;
  std::vector<ModuleVector> vectors;  // radical basis at r = r0, constant coefficients
  bool closure_verified = true;       // B_+ maps each vector into a lower radical
  std::size_t closure_checks = 0;
  std::vector<std::string> witnesses;
};

/// Radical of the degree-d Gram matrix at r = r0, with a submodule-closure
/// witness: every B_+ generator lowering the degree by 0..d (modes bounded by
/// d + 1) sends each radical vector into the radical of the target degree.
SingularVectors singular_vectors(const InducedModule& module, int d, const Rational& r0);

}  // namespace jvoa
