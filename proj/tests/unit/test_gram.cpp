#include <gtest/gtest.h>

#include <random>

#include "jvoa/errors.hpp"
#include "jvoa/fermion_fock.hpp"
#include "jvoa/gram.hpp"
#include "lie_support.hpp"
#include "module_support.hpp"

using namespace jvoa;
using jvoa::fixtures::random_generator;
using jvoa::fixtures::random_vector;

namespace {

constexpr int P1 = 0, S1 = 2;

const InducedModule& c4() {
  static const InducedModule m{LoopAlgebra(SpaceSpec::symplectic(4))};
  return m;
}

const InducedModule& b3() {
  static const InducedModule m{LoopAlgebra(SpaceSpec::orthogonal(3))};
  return m;
}

ModuleVector gen_state(const InducedModule& m, int a, int b) {
  return m.apply(m.algebra().element(a, -1, b, -1), ModuleVector::vacuum());
}

}  // namespace

TEST(Gram, Examples) {
  const auto g0 = gram_matrix(c4(), 0);
  ASSERT_EQ(g0.entries.size(), 1u);
  EXPECT_EQ(g0.entries[0][0], RPoly(1));
  const ModuleVector nu = gen_state(c4(), P1, S1);
  EXPECT_EQ(pairing(c4(), nu, nu), -RPoly::r());
}

TEST(Gram, TypeBDegreeTwo) {
  const auto& m = b3();
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int u = 0; u < 3; ++u)
        for (int v = u; v < 3; ++v) {
          const Rational expected = (a == u) * (b == v) + (a == v) * (b == u);
          EXPECT_EQ(pairing(m, RPoly(2) * gen_state(m, a, b), RPoly(2) * gen_state(m, u, v)),
                    expected * RPoly::r());
        }
}

TEST(Gram, Symmetric) {
  for (int d = 0; d <= 5; ++d) EXPECT_TRUE(gram_matrix(c4(), d).is_symmetric()) << d;
  for (int d = 0; d <= 4; ++d) EXPECT_TRUE(gram_matrix(b3(), d).is_symmetric()) << d;
}

TEST(Gram, Contravariance) {
  std::mt19937_64 rng(31);
  for (const InducedModule* m : {&c4(), &b3()}) {
    const auto& alg = m->algebra();
    for (int k = 0; k < 150; ++k) {
      const Generator g = random_generator(alg, rng, 3);
      const int du = std::uniform_int_distribution<int>(0, 3)(rng);
      const int dw = du - g.mode_sum();
      if (dw < 0 || dw > 5) continue;
      const ModuleVector u = random_vector(*m, du, rng);
      const ModuleVector w = random_vector(*m, dw, rng);
      EXPECT_EQ(pairing(*m, m->apply(g, u), w), pairing(*m, u, m->apply(alg.adjoint(g), w)));
    }
  }
}

TEST(Gram, DegreeOrthogonality) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const ModuleVector u = random_vector(c4(), 2, rng), w = random_vector(c4(), 3, rng);
    EXPECT_TRUE(pairing(c4(), u, w).is_zero());
  }
}

// At r = 1 the form is recomputed inside the fermionic Fock space.
TEST(Gram, FermionicOracleAtOne) {
  const auto& m = c4();
  const FermionFock fock(m.space());
  for (int d = 2; d <= 4; ++d) {
    const auto g = gram_matrix(m, d);
    for (std::size_t i = 0; i < g.basis.size(); ++i)
      for (std::size_t j = 0; j < g.basis.size(); ++j) {
        FermionVector w = fock.evaluate_at_r1(ModuleVector::basis_vector(g.basis[j]));
        for (const auto& x : g.basis[i]) {
          const auto adj = m.algebra().adjoint(x);
          w = fock.quadratic(adj.gen, w);
          for (auto& [mono, c] : w) c *= adj.sign;
        }
        const auto it = w.find({});
        const Rational expected = it == w.end() ? Rational(0) : it->second;
        EXPECT_EQ(g.entries[i][j].evaluate_at(1), expected) << d << " " << i << " " << j;
      }
  }
}

TEST(Gram, AnalysisDegreeTwo) {
  const auto a = gram_analysis(c4(), 2, {make_rational(1, 2)});
  EXPECT_EQ(a.det.degree(), 6);
  EXPECT_EQ(a.det.valuation(), 6u);
  EXPECT_EQ(a.integer_roots, (std::set<Integer>{0}));
  EXPECT_EQ(a.rank_at.at(make_rational(1, 2)), 6u);
}

TEST(Gram, FullRankAtNonIntegers) {
  const std::vector<Rational> points{make_rational(1, 2), make_rational(-1, 3), make_rational(7, 2)};
  for (int d = 2; d <= 4; ++d) {
    const auto a = gram_analysis(c4(), d, points);
    EXPECT_TRUE(a.integer_roots.count(0));
    for (const auto& [r0, k] : a.rank_at) EXPECT_EQ(k, a.dimension);
    for (const auto& root : a.integer_roots)
      EXPECT_LT(rank(evaluate_at(gram_matrix(c4(), d).entries, Rational(root))), a.dimension);
  }
}

TEST(Gram, RadicalMatchesFermionKernel) {
  const FermionFock fock(c4().space());
  const auto kr = kernel_rank(c4(), fock, 4);
  const auto a = gram_analysis(c4(), 4, {Rational(1)});
  EXPECT_EQ(a.rank_at.at(Rational(1)), kr.image_dim);
  EXPECT_EQ(a.dimension - a.rank_at.at(Rational(1)), 20u);
}

TEST(Gram, ZeroDeterminantIsAnError) {
  GramMatrix g;
  g.degree = 1;
  g.basis = {{}, {}};
  g.entries.assign(2, std::vector<RPoly>(2));
  EXPECT_THROW(gram_analysis(g), ZeroPolynomial);
}

TEST(Gram, SingularVectors) {
  const auto s0 = singular_vectors(c4(), 2, Rational(0));
  EXPECT_EQ(s0.vectors.size(), 6u);
  EXPECT_TRUE(s0.closure_verified);
  EXPECT_TRUE(singular_vectors(c4(), 2, Rational(1)).vectors.empty());
  const auto s4 = singular_vectors(c4(), 4, Rational(1));
  EXPECT_EQ(s4.vectors.size(), 20u);
  EXPECT_TRUE(s4.closure_verified);
  EXPECT_GT(s4.closure_checks, 0u);
  const FermionFock fock(c4().space());
  for (const auto& v : s4.vectors) EXPECT_TRUE(fock.evaluate_at_r1(v).empty());
}
