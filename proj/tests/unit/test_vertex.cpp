#include <gtest/gtest.h>

#include <random>

#include "jvoa/errors.hpp"
#include "jvoa/vertex.hpp"
#include "module_support.hpp"

using namespace jvoa;
using jvoa::fixtures::random_vector;

namespace {

constexpr int P1 = 0, P2 = 1, S1 = 2, S2 = 3;

struct Fixture {
  SpaceSpec space;
  InducedModule module;
  VertexEngine engine;
  explicit Fixture(SpaceSpec s) : space(s), module(LoopAlgebra(s)), engine(module) {}
};

Fixture& c4() {
  static Fixture f(SpaceSpec::symplectic(4));
  return f;
}

Fixture& b3() {
  static Fixture f(SpaceSpec::orthogonal(3));
  return f;
}

ModuleVector gen_state(const Fixture& f, int a, int b, int i = 1, int j = 1) {
  return f.module.apply(f.module.algebra().element(a, -i, b, -j), ModuleVector::vacuum());
}

std::vector<std::pair<int, int>> label_pairs(const SpaceSpec& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : jordan_basis(s)) out.push_back(g.terms().begin()->first);
  return out;
}

std::vector<std::pair<int, int>> non_frame_pairs(const Fixture& f) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : label_pairs(f.space))
    if (!f.engine.is_frame_pair(a, b)) out.push_back({a, b});
  return out;
}

Rational factorial(int k) {
  Rational x = 1;
  for (int i = 2; i <= k; ++i) x *= i;
  return x;
}

}  // namespace

TEST(Vertex, ApplyModeExamples) {
  auto& f = c4();
  for (auto [a, b] : label_pairs(f.space)) {
    for (int l = 0; l <= 3; ++l) EXPECT_TRUE(f.engine.apply_mode(a, b, l, ModuleVector::vacuum()).is_zero());
    EXPECT_EQ(f.engine.apply_mode(a, b, -1, ModuleVector::vacuum()), gen_state(f, a, b));
  }
  EXPECT_TRUE(f.engine.apply_mode(P1, S1, 1, gen_state(f, P2, S2)).is_zero());
}

TEST(Vertex, WordsEvaluateToGeneratingStates) {
  auto& f = c4();
  for (auto [a, b] : label_pairs(f.space)) {
    const State s = f.engine.generating_state(a, b);
    EXPECT_EQ(s.vector, gen_state(f, a, b));
    EXPECT_EQ(f.engine.evaluate(s.presentation), s.vector);
  }
}

TEST(Vertex, NthProductExamples) {
  auto& f = c4();
  const State nu = f.engine.generating_state(P1, S1);
  EXPECT_EQ(f.engine.nth_product(nu, 1, nu.vector), RPoly(2) * nu.vector);
  EXPECT_EQ(f.engine.nth_product(nu, 3, nu.vector), -RPoly::r() * ModuleVector::vacuum());
  for (auto [a, b] : label_pairs(f.space))
    for (auto [u, v] : label_pairs(f.space))
      for (int n = 4; n <= 6; ++n)
        EXPECT_TRUE(f.engine.nth_product(f.engine.generating_state(a, b), n, gen_state(f, u, v)).is_zero());
}

TEST(Vertex, NthProductNeedsPresentation) {
  auto& f = c4();
  EXPECT_THROW(f.engine.nth_product(VertexEngine::bare(gen_state(f, P1, S1)), 1, ModuleVector::vacuum()),
               NoPresentation);
}

TEST(Vertex, GeneratingProductIsTheModeAction) {
  auto& f = c4();
  std::mt19937_64 rng(11);
  for (auto [a, b] : label_pairs(f.space))
    for (int n = -3; n <= 3; ++n) {
      const ModuleVector w = random_vector(f.module, 3, rng);
      EXPECT_EQ(f.engine.nth_product(f.engine.generating_state(a, b), n, w), f.engine.apply_mode(a, b, n, w));
    }
}

TEST(Vertex, VacuumAndCreation) {
  auto& f = c4();
  for (auto [a, b] : non_frame_pairs(f))
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const State u = f.engine.lemma_state(a, b, i, j);
        EXPECT_EQ(f.engine.nth_product(u, -1, ModuleVector::vacuum()), u.vector);
        for (int n = 0; n <= 3; ++n) EXPECT_TRUE(f.engine.nth_product(u, n, ModuleVector::vacuum()).is_zero());
      }
}

// Skew-symmetry u(n)w = sum_j (-1)^{n+j+1} T^j/j! w(n+j)u with T = omega(0)
// computes the left side from direct mode actions only.
TEST(Vertex, RecursionAgreesWithSkewSymmetry) {
  auto& f = c4();
  const Field omega = f.engine.omega();
  for (auto [a, b] : non_frame_pairs(f))
    for (auto [c, d] : label_pairs(f.space)) {
      const State u = f.engine.lemma_state(a, b, 2, 1);
      for (int n = -1; n <= 4; ++n) {
        ModuleVector skew;
        for (int j = 0; n + j <= 5; ++j) {
          if (n + j < -1) continue;
          ModuleVector t = f.engine.apply_mode(c, d, n + j, u.vector);
          for (int k = 0; k < j; ++k) t = f.engine.apply_mode(omega, 0, t);
          const Rational sign = (n + j + 1) % 2 == 0 ? 1 : -1;
          skew += (sign / factorial(j)) * t;
        }
        EXPECT_EQ(f.engine.nth_product(u, n, gen_state(f, c, d)), skew) << a << b << c << d << " n=" << n;
      }
    }
}

TEST(Vertex, LemmaStatePresentation) {
  for (Fixture* f : {&c4(), &b3()})
    for (auto [a, b] : non_frame_pairs(*f))
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; i + j <= 4; ++j) {
          const State u = f->engine.lemma_state(a, b, i, j);
          EXPECT_EQ(u.vector, gen_state(*f, a, b, i, j));
        }
  EXPECT_THROW(c4().engine.lemma_state(P1, S1, 1, 1), InvalidPair);
}

TEST(Vertex, GriessExamples) {
  auto& f = c4();
  const State nu1 = f.engine.generating_state(P1, S1);
  const State nu2 = f.engine.generating_state(P2, S2);
  EXPECT_EQ(griess_product(f.engine, nu1, nu1), RPoly(2) * nu1.vector);
  EXPECT_TRUE(griess_product(f.engine, nu1, nu2).is_zero());
  EXPECT_THROW(griess_product(f.engine, nu1, VertexEngine::bare(ModuleVector::vacuum())), DegreeMismatch);
}

TEST(Vertex, GriessSuiteTypeC) {
  const auto report = griess_suite(c4().engine);
  EXPECT_TRUE(report.formula_holds);
  EXPECT_TRUE(report.jordan_isomorphism);
  EXPECT_TRUE(report.symmetric);
  EXPECT_TRUE(report.jordan_identity);
  EXPECT_EQ(report.pairs, 36u);
  for (const auto& w : report.witnesses) ADD_FAILURE() << w;
}

TEST(Vertex, GriessSuiteTypeB) {
  const auto report = griess_suite(b3().engine);
  EXPECT_TRUE(report.jordan_isomorphism);
  EXPECT_TRUE(report.symmetric);
  EXPECT_TRUE(report.jordan_identity);
  for (const auto& w : report.witnesses) ADD_FAILURE() << w;
}

TEST(Vertex, CentralCharge) {
  const auto cc = central_charge(c4().engine);
  EXPECT_EQ(cc.omega_c, RPoly(-4) * RPoly::r());
  ASSERT_EQ(cc.frame_c.size(), 2u);
  for (const auto& c : cc.frame_c) EXPECT_EQ(c, RPoly(-2) * RPoly::r());
  const Fixture c6(SpaceSpec::symplectic(6));
  EXPECT_EQ(central_charge(c6.engine).omega_c, RPoly(-6) * RPoly::r());
}

TEST(Vertex, OmegaGradesTheModule) {
  auto& f = c4();
  const ModuleVector v = gen_state(f, P1, P2, 2, 1);
  EXPECT_EQ(f.engine.apply_mode(f.engine.omega(), 1, v), RPoly(3) * v);
}

TEST(Vertex, VirasoroSuite) {
  const auto report = virasoro_suite(c4().engine, 2, 2);
  EXPECT_TRUE(report.grading);
  EXPECT_TRUE(report.translation);
  EXPECT_TRUE(report.bracket);
  EXPECT_EQ(report.c, RPoly(-4) * RPoly::r());
  EXPECT_EQ(report.vectors, 7u);
  for (const auto& w : report.witnesses) ADD_FAILURE() << w;
}

TEST(Vertex, LocalityExamples) {
  auto& f = c4();
  EXPECT_EQ(locality_order(f.engine, Field::single(P1, S1), Field::single(P1, S1), 6), 4);
  const int order = locality_order(f.engine, Field::single(P1, P2), Field::single(P1, P2), 6);
  EXPECT_LE(order, 4);
  EXPECT_TRUE(f.engine.apply_mode(P1, P2, 3, gen_state(f, P1, P2)).is_zero());
  const auto pairs = label_pairs(f.space);
  int unordered = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j) {
      ++unordered;
      EXPECT_LE(locality_order(f.engine, Field::single(pairs[i].first, pairs[i].second),
                               Field::single(pairs[j].first, pairs[j].second), 6),
                4);
    }
  EXPECT_EQ(unordered, 21);
}

TEST(Vertex, BorcherdsExamples) {
  auto& f = c4();
  std::mt19937_64 rng(5);
  const Field nu = Field::single(P1, S1);
  EXPECT_TRUE(borcherds_check(f.engine, nu, nu, 1, -1, random_vector(f.module, 3, rng)));
  for (int n = -2; n <= 2; ++n)
    EXPECT_TRUE(borcherds_check(f.engine, Field::single(P1, P2), Field::single(S1, S2), 0, n,
                                random_vector(f.module, 2, rng)));
  EXPECT_TRUE(borcherds_check(f.engine, nu, Field::single(P2, S2), -1, -1, random_vector(f.module, 2, rng)));
}

TEST(Vertex, BorcherdsRandomized) {
  auto& f = c4();
  std::mt19937_64 rng(2024);
  const auto pairs = label_pairs(f.space);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  std::uniform_int_distribution<int> mode(-2, 2), deg(0, 3);
  for (int k = 0; k < 40; ++k) {
    const auto [a, b] = pairs[pick(rng)];
    const auto [c, d] = pairs[pick(rng)];
    const int m = mode(rng), n = mode(rng);
    EXPECT_TRUE(borcherds_check(f.engine, Field::single(a, b), Field::single(c, d), m, n,
                                random_vector(f.module, deg(rng), rng)));
  }
}

TEST(Vertex, Lemma1Examples) {
  auto& f = c4();
  std::mt19937_64 rng(9);
  for (int s = -3; s <= 3; ++s) EXPECT_TRUE(lemma1_identity_check(f.engine, P1, P2, 1, 1, s, random_vector(f.module, 2, rng)));
  EXPECT_TRUE(lemma1_identity_check(f.engine, P1, P2, 2, 1, 0, random_vector(f.module, 3, rng)));
  EXPECT_THROW(lemma1_identity_check(f.engine, P1, S1, 1, 1, 0, ModuleVector::vacuum()), InvalidPair);
}

TEST(Vertex, Lemma1Sweep) {
  auto& f = c4();
  for (auto [a, b] : non_frame_pairs(f))
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; i + j <= 4; ++j)
        for (int s = -3; s <= 3; ++s)
          for (int d = 0; d <= 2; ++d)
            for (const auto& mono : f.module.basis(d))
              EXPECT_TRUE(lemma1_identity_check(f.engine, a, b, i, j, s, ModuleVector::basis_vector(mono)))
                  << a << b << " i=" << i << " j=" << j << " s=" << s;
}

TEST(Vertex, Lemma1TypeB) {
  auto& f = b3();
  std::mt19937_64 rng(3);
  for (auto [a, b] : non_frame_pairs(f))
    for (int s = -2; s <= 2; ++s)
      EXPECT_TRUE(lemma1_identity_check(f.engine, a, b, 2, 1, s, random_vector(f.module, 2, rng)));
}

TEST(Vertex, BinomialDeterminant) {
  EXPECT_EQ(binomial_matrix(0, 1), (QMatrix{{Rational(1), Rational(1)}, {Rational(-1), Rational(-2)}}));
  EXPECT_EQ(binomial_matrix_det(0, 1), -1);
  for (int t = -3; t <= 3; ++t) {
    EXPECT_EQ(binomial_matrix_det(t, 0), 1);
    EXPECT_EQ(binomial_matrix_det(t, 3), 1);
  }
  for (int N = 0; N <= 8; ++N)
    for (int t = -3; t <= 3; ++t) EXPECT_EQ(binomial_matrix_det(t, N), (N * (N + 1) / 2) % 2 == 0 ? 1 : -1);
}

TEST(Vertex, GeneratorFromModesRoundTrip) {
  auto& f = c4();
  std::mt19937_64 rng(17);
  for (int s : {-2, -1, 0, 1}) {
    const ModuleVector v = random_vector(f.module, 3, rng);
    const auto [t, N] = generator_window(v, s);
    const auto got = generator_from_modes(f.engine, P1, P2, s, t, N, v);
    ASSERT_EQ(got.size(), static_cast<std::size_t>(N + 1));
    for (int k = 0; k <= N; ++k)
      EXPECT_EQ(got[k], f.module.apply(f.module.algebra().element(P1, t + k, P2, s - t - k), v));
  }
}

TEST(Vertex, GeneratorFromModesOnVacuum) {
  auto& f = c4();
  const auto got = generator_from_modes(f.engine, P1, S2, -3, -3, 3, ModuleVector::vacuum());
  for (int k = 0; k <= 3; ++k) {
    const int j = -3 + k;
    if (j >= 0 || -3 - j >= 0) EXPECT_TRUE(got[k].is_zero());
  }
  EXPECT_EQ(got[1], gen_state(f, P1, S2, 2, 1));
  EXPECT_THROW(generator_from_modes(f.engine, P1, P2, 0, 0, -1, ModuleVector::vacuum()), SingularWindow);
}

TEST(Vertex, GeneratorFromModesSingleUnknown) {
  auto& f = c4();
  const auto got = generator_from_modes(f.engine, P1, P2, -2, -1, 0, ModuleVector::vacuum());
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], gen_state(f, P1, P2));
}

TEST(Vertex, SpanCheck) {
  const auto report = span_check(c4().engine, 3, make_rational(1, 2));
  EXPECT_TRUE(report.passed);
  std::vector<std::size_t> ranks;
  for (const auto& d : report.degrees) ranks.push_back(d.rank);
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 0, 6, 16}));
  const Fixture c2(SpaceSpec::symplectic(2, true));
  EXPECT_THROW(span_check(c2.engine, 2, make_rational(1, 2)), DimensionTooSmall);
}

TEST(Vertex, CentralChargeTypeB) {
  const auto cc = central_charge(b3().engine);
  EXPECT_EQ(cc.omega_c, RPoly(3) * RPoly::r());
  for (const auto& c : cc.frame_c) EXPECT_EQ(c, RPoly::r());
  const auto report = virasoro_suite(b3().engine, 2, 2);
  EXPECT_TRUE(report.grading && report.translation && report.bracket);
}

TEST(Vertex, PresentationSearch) {
  auto& f = c4();
  std::mt19937_64 rng(23);
  for (int d : {0, 2, 3, 4}) {
    const ModuleVector v = random_vector(f.module, d, rng);
    const auto pres = f.engine.find_presentation(v);
    ASSERT_TRUE(pres.has_value()) << d;
    EXPECT_EQ(f.engine.evaluate(*pres), v);
  }
  EXPECT_THROW(f.engine.find_presentation(ModuleVector::vacuum() + gen_state(f, P1, P2)), DegreeMismatch);
}

TEST(Vertex, VircomFrameVariantHolds) {
  auto& f = c4();
  std::size_t literal = 0, total = 0;
  for (auto [a, b] : non_frame_pairs(f))
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int l = -2; l <= 3; ++l)
          for (int d = 0; d <= 2; ++d)
            for (const auto& mono : f.module.basis(d)) {
              const auto r = vircom_check(f.engine, a, b, i, j, l, ModuleVector::basis_vector(mono));
              EXPECT_TRUE(r.first_frame);
              EXPECT_TRUE(r.second_frame);
              literal += r.first_literal;
              ++total;
            }
  EXPECT_LT(literal, total);
}

TEST(Vertex, Lemma1OnFramePairs) {
  auto& f = c4();
  for (auto [a, b] : {std::pair{P1, S1}, std::pair{P2, S2}})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; i + j <= 4; ++j)
        for (int s = -3; s <= 3; ++s)
          for (int d = 0; d <= 2; ++d)
            for (const auto& mono : f.module.basis(d))
              EXPECT_TRUE(lemma1_identity_check(f.engine, a, b, i, j, s, ModuleVector::basis_vector(mono), true));
  EXPECT_TRUE(lemma1_frame_check_at(f.engine, P1, S1, 2, 2, 0, gen_state(f, P1, S1), make_rational(3)));
}
