#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "jvoa/induced_module.hpp"
#include "jvoa/jordan.hpp"
#include "jvoa/linalg.hpp"

namespace jvoa {

/// One field mode L_{a,b}(l) = sum_k L_{a,b}(-k+l-1, k).
struct ModeLetter {
  int a = 0;
  int b = 0;
  int l = 0;
  auto operator<=>(const ModeLetter&) const = default;
};

/// Letters applied right to left to v_r: word[0] is the outermost mode.
using ModeWord = std::vector<ModeLetter>;

/// Degree of word . v_r, i.e. the sum of (1 - l).
int word_weight(const ModeWord& word);

struct WordTerm {
  Rational coef;
  ModeWord word;
};

/// Linear combination of generating states L_{a,b} = L_{a,b}(-1,-1) v_r,
/// used as a field through its modes.
struct Field {
  std::vector<std::tuple<Rational, int, int>> terms;

  static Field single(int a, int b, const Rational& c = 1) { return {{{c, a, b}}}; }
};

/// A vector of M_r together with (optionally) a mode-word presentation.
struct State {
  ModuleVector vector;
  std::vector<WordTerm> presentation;

  bool has_presentation() const { return !presentation.empty() || vector.is_zero(); }
};

class VertexEngine {
 public:
  explicit VertexEngine(const InducedModule& module) : module_(module) {}

  const InducedModule& module() const { return module_; }
  const LoopAlgebra& algebra() const { return module_.algebra(); }
  const SpaceSpec& space() const { return module_.space(); }

  /// L_{a,b}(l) v with the mode sum truncated to terms that can act nontrivially.
  ModuleVector apply_mode(int a, int b, int l, const ModuleVector& v) const;
  ModuleVector apply_mode(const Field& x, int l, const ModuleVector& v) const;

  ModuleVector evaluate(const ModeWord& word) const;
  ModuleVector evaluate(const std::vector<WordTerm>& presentation) const;

  State generating_state(int a, int b) const;
  State field_state(const Field& x) const;
  /// x(j) applied to a state; keeps a presentation when y has one.
  State mode_state(const Field& x, int j, const State& y) const;
  /// State from a presentation; the vector is evaluated from it.
  State state_from_presentation(std::vector<WordTerm> presentation) const;
  /// Bare vector with no presentation.
  static State bare(ModuleVector v) { return {std::move(v), {}}; }

  /// L_{a,b}(-i,-j) v_r for a non-frame pair, presented as
  /// nu_{k(a)}(0)^{i-1} nu_{k(b)}(0)^{j-1} L_{a,b}(-1) v_r / ((i-1)!(j-1)!).
  State lemma_state(int a, int b, int i, int j) const;

  /// u(n) w through the iterate formula on u's presentation.
  /// Throws NoPresentation when u has none.
  ModuleVector nth_product(const State& u, int n, const ModuleVector& w) const;
  State nth_product(const State& u, int n, const State& w) const;

  /// Search for a rational combination of mode words equal to v,
  /// exactly in Q[r], or at r = r0 when given; v must be homogeneous.
  std::optional<std::vector<WordTerm>> find_presentation(const ModuleVector& v,
                                                         const std::optional<Rational>& r0 = std::nullopt) const;

  /// Mutually orthogonal Virasoro elements L_{psi_i,psi*_i} (type C) or
  /// L_{e_i,e_i} (type B), and their sum.
  std::vector<Field> frame_fields() const;
  Field omega() const;

  /// Degree-2 state <-> Jordan element under L_{a,b}(-1,-1)v_r <-> L_{a,b}.
  JordanElement to_jordan(const ModuleVector& v) const;
  ModuleVector from_jordan(const JordanElement& x) const;

  /// Is (a,b) a frame pair (same particle for type C, a == b for type B)?
  bool is_frame_pair(int a, int b) const;

 private:
  ModuleVector word_product(const ModeWord& word, std::size_t start, int n, const ModuleVector& w) const;

  const InducedModule& module_;
};

/// x(1)y for homogeneous degree-2 states; throws DegreeMismatch otherwise.
ModuleVector griess_product(const VertexEngine& engine, const State& x, const State& y);

/// Scalar k with k x(1)y = the Jordan product under L <-> L: 1/2 for type C,
/// 1 for type B.
Rational griess_jordan_factor(const SpaceSpec& space);

struct GriessReport {
  bool formula_holds = true;
  bool jordan_isomorphism = true;
  bool symmetric = true;
  bool jordan_identity = true;
  std::size_t pairs = 0;
  std::vector<std::string> witnesses;
};

/// All basis pairs of V_2: x(1)y against the printed formula, k x(1)y
/// against the Jordan product, symmetry, and the Jordan identity on samples.
GriessReport griess_suite(const VertexEngine& engine);

struct CentralCharge {
  RPoly omega_c;                   // c from omega(3)omega = (c/2) v_r
  std::vector<RPoly> frame_c;      // per frame element
};
CentralCharge central_charge(const VertexEngine& engine);

struct VirasoroReport {
  bool grading = true;
  bool translation = true;
  bool bracket = true;
  RPoly c;
  std::size_t vectors = 0;
  std::size_t bracket_checks = 0;
  std::vector<std::string> witnesses;
};

/// omega(1) = degree, omega(0) injective, and the Virasoro relations with
/// T(m) = omega(m+1) for m, n in [-mode_span, mode_span] on all basis vectors
/// of degree <= max_degree.
VirasoroReport virasoro_suite(const VertexEngine& engine, int max_degree, int mode_span);

/// Least N with x(j)y = 0 for all N <= j <= max_j (x(j)y for j >= wt(x)+wt(y)
/// vanishes by degree).
int locality_order(const VertexEngine& engine, const Field& x, const Field& y, int max_j);

/// [x(m), y(n)] v = sum_j C(m,j) (x(j)y)(m+n-j) v.
bool borcherds_check(const VertexEngine& engine, const Field& x, const Field& y, int m, int n,
                     const ModuleVector& v);

/// (L_{a,b}(-i,-j)v_r)(s+i+j-1) v against the binomial-weighted generator
/// sum. Throws InvalidPair for a frame pair unless allow_frame is set, in which
/// case the left side uses a searched presentation.
bool lemma1_identity_check(const VertexEngine& engine, int a, int b, int i, int j, int s, const ModuleVector& v,
                           bool allow_frame = false);

/// Frame-pair version specialized at r = r0, where the presentation of
/// L_{a,b}(-i,-j)v_r may need coefficients depending on r.
bool lemma1_frame_check_at(const VertexEngine& engine, int a, int b, int i, int j, int s, const ModuleVector& v,
                           const Rational& r0);

/// sum_k (-1)^{i+j} C(i+k-1,i-1) C(j+s-k-1,j-1) L_{a,b}(k,s-k) v.
ModuleVector lemma1_rhs(const VertexEngine& engine, int a, int b, int i, int j, int s, const ModuleVector& v);

struct VircomResult {
  bool first_frame = false;    // first slot, commutator with nu_{k(a)}(0)
  bool first_literal = false;  // first slot, commutator with L_{a,b}(0)
  bool second_frame = false;   // second slot, commutator with nu_{k(b)}(0)
};

/// (L_{a,b}(-i-1,-j)v_r)(l) v = (1/i)[X(0), (L_{a,b}(-i,-j)v_r)(l)] v, and
/// the analogous second-slot relation, for both choices of X.
VircomResult vircom_check(const VertexEngine& engine, int a, int b, int i, int j, int l, const ModuleVector& v);

/// (N+1)x(N+1) matrix (-1)^(i-1) C(t+i+j-2, i-1) and its determinant.
QMatrix binomial_matrix(int t, int N);
Rational binomial_matrix_det(int t, int N);

/// Smallest window [t, t+N] outside of which L_{a,b}(j, s-j) v vanishes.
std::pair<int, int> generator_window(const ModuleVector& v, int s);

/// Recovers L_{a,b}(j, s-j) v for j in [t, t+N] from the values
/// (L_{a,b}(-i,-1)v_r)(s+i) v, i = 1..N+1.
std::vector<ModuleVector> generator_from_modes(const VertexEngine& engine, int a, int b, int s, int t, int N,
                                               const ModuleVector& v);

struct SpanDegree {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t graded_dim = 0;
};

struct SpanReport {
  bool passed = true;
  std::vector<SpanDegree> degrees;
};

/// Rank of the span of mode words applied to v_r in each degree <= D,
/// specialized at r0. Throws DimensionTooSmall when dim W = 2.
SpanReport span_check(const VertexEngine& engine, int max_degree, const Rational& r0);

}  // namespace jvoa
