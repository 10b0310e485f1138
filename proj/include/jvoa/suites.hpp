#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jvoa/fermion_fock.hpp"
#include "jvoa/gram.hpp"
#include "jvoa/jordan.hpp"
#include "jvoa/verma.hpp"
#include "jvoa/vertex.hpp"

namespace jvoa {

/// Seeded draws built only on std::mt19937_64 output, so a seed gives the
/// same selections on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  Rational rational(long span = 9, long den_max = 4);
  Generator generator(const LoopAlgebra& algebra, int mode_span = 3);
  JordanElement jordan_element(const SpaceSpec& space);
  /// Nonzero combination of up to `terms` degree-d basis vectors; zero when
  /// the component is empty.
  ModuleVector module_vector(const InducedModule& module, int d, int terms = 3);

 private:
  std::mt19937_64 rng_;
};

/// Labels (a, b) of the canonical generators L_{a,b} of V_2, in basis order.
std::vector<std::pair<int, int>> label_pairs(const SpaceSpec& space);

struct Check {
  Check() = default;
  explicit Check(std::string label) : name(std::move(label)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;

  static constexpr std::size_t kMaxWitnesses = 10;

  void record(bool ok, const std::function<std::string()>& describe);
  void absorb(bool ok, std::size_t cases, const std::vector<std::string>& witnesses);
};

using Facts = std::vector<std::pair<std::string, std::string>>;

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  Facts facts;

  bool passed() const;
};

struct JordanSuite {
  std::vector<std::vector<std::string>> table;  // frame products e_i o e_j
  std::vector<Check> checks;
  bool passed() const;
};

/// Frame idempotence, orthogonality, unit, commutativity and the Jordan
/// identity on `samples` random pairs.
JordanSuite jordan_frame_suite(const SpaceSpec& space, int samples, Sampler& sampler);

/// Antisymmetry on `samples` random pairs and Jacobi on `samples` random triples.
std::vector<Check> lie_axioms_suite(const LoopAlgebra& algebra, int samples, Sampler& sampler);

struct LocalityRow {
  std::pair<int, int> x, y;
  int order = 0;
};

struct LocalitySuite {
  std::vector<LocalityRow> rows;
  int max_order = 0;
  Check check;
};

/// Locality order of every unordered pair of generating fields against the
/// bound wt(x) + wt(y) = 4.
LocalitySuite locality_suite(const VertexEngine& engine, int max_j);

/// Borcherds commutator formula on random fields, modes and vectors.
Check borcherds_suite(const VertexEngine& engine, int samples, Sampler& sampler, int mode_span = 2,
                      int max_degree = 3);

/// Lemma 1 on every pair, i + j <= max_ij, |s| <= s_span, and every basis
/// vector of degree <= max_degree; frame pairs go through presentation search.
std::vector<Check> lemma1_suite(const VertexEngine& engine, int max_ij, int s_span, int max_degree);

/// det of the binomial matrix against (-1)^{N(N+1)/2}.
Check binomial_suite(int max_N, int tmin, int tmax);

/// generator_from_modes against the direct action on random instances
/// (non-frame pairs).
Check roundtrip_suite(const VertexEngine& engine, int samples, Sampler& sampler);

/// -dim r for type C, dim r for type B.
RPoly expected_central_charge(const SpaceSpec& space);
/// -2r per frame element for type C, r for type B.
RPoly expected_frame_charge(const SpaceSpec& space);

/// The twelve acceptance criteria over the symplectic space of dimension 4
/// (plus the fixed companion spaces named in each criterion).
struct SuiteConfig {
  std::uint64_t seed = 7;
  int max_degree = 4;
};

Criterion criterion_jordan_frames(const SuiteConfig& config);
Criterion criterion_bracket_oracle(const SuiteConfig& config);
Criterion criterion_lie_axioms(const SuiteConfig& config);
Criterion criterion_griess(const SuiteConfig& config);
Criterion criterion_locality(const SuiteConfig& config);
Criterion criterion_central_charge(const SuiteConfig& config);
Criterion criterion_virasoro(const SuiteConfig& config);
Criterion criterion_lemma1(const SuiteConfig& config);
Criterion criterion_generation(const SuiteConfig& config);
Criterion criterion_gram(const SuiteConfig& config);
Criterion criterion_verma(const SuiteConfig& config);
Criterion criterion_ideal(const SuiteConfig& config);

using CriterionRunner = Criterion (*)(const SuiteConfig&);
const std::vector<CriterionRunner>& acceptance_criteria();

}  // namespace jvoa
