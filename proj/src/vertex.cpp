#include "jvoa/vertex.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "jvoa/errors.hpp"
#include "jvoa/linalg.hpp"

namespace jvoa {

namespace {

int max_abs_mode(const PBWMonomial& mono) {
  int m = 0;
  for (const auto& g : mono) m = std::max({m, std::abs(g.m), std::abs(g.n)});
  return m;
}

int max_abs_mode(const ModuleVector& v) {
  int m = 0;
  for (const auto& [mono, c] : v.terms()) m = std::max(m, max_abs_mode(mono));
  return m;
}

Rational sign_power(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

using CoordKey = std::pair<PBWMonomial, std::size_t>;

std::map<CoordKey, Rational> coordinates(const ModuleVector& v) {
  std::map<CoordKey, Rational> out;
  for (const auto& [mono, c] : v.terms())
    for (std::size_t k = 0; k < c.coefficients().size(); ++k)
      if (c.coefficients()[k] != 0) out[{mono, k}] = c.coefficients()[k];
  return out;
}

}  // namespace

int word_weight(const ModeWord& word) {
  int w = 0;
  for (const auto& x : word) w += 1 - x.l;
  return w;
}

ModuleVector VertexEngine::apply_mode(int a, int b, int l, const ModuleVector& v) const {
  const auto& alg = algebra();
  ModuleVector out;
  for (const auto& [mono, coef] : v.terms()) {
    const int M = max_abs_mode(mono);
    for (int p = l - 1 - M; p <= M; ++p) {
      const auto sg = alg.canonicalize(a, p, b, l - 1 - p);
      if (sg.is_zero()) continue;
      ModuleVector term = module_.apply(sg.gen, mono);
      if (term.is_zero()) continue;
      term *= sg.sign == 1 ? coef : -coef;
      out += term;
    }
  }
  return out;
}

ModuleVector VertexEngine::apply_mode(const Field& x, int l, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [c, a, b] : x.terms) out += c * apply_mode(a, b, l, v);
  return out;
}

ModuleVector VertexEngine::evaluate(const ModeWord& word) const {
  ModuleVector v = ModuleVector::vacuum();
  for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) v = apply_mode(it->a, it->b, it->l, v);
  return v;
}

ModuleVector VertexEngine::evaluate(const std::vector<WordTerm>& presentation) const {
  ModuleVector out;
  for (const auto& t : presentation) out += t.coef * evaluate(t.word);
  return out;
}

State VertexEngine::generating_state(int a, int b) const { return field_state(Field::single(a, b)); }

State VertexEngine::field_state(const Field& x) const {
  std::vector<WordTerm> pres;
  for (const auto& [c, a, b] : x.terms) pres.push_back({c, {{a, b, -1}}});
  return state_from_presentation(std::move(pres));
}

State VertexEngine::mode_state(const Field& x, int j, const State& y) const {
  State out;
  out.vector = apply_mode(x, j, y.vector);
  if (!y.has_presentation() || out.vector.is_zero()) return out;
  for (const auto& [c, a, b] : x.terms)
    for (const auto& t : y.presentation) {
      ModeWord w{{a, b, j}};
      w.insert(w.end(), t.word.begin(), t.word.end());
      out.presentation.push_back({c * t.coef, std::move(w)});
    }
  return out;
}

State VertexEngine::state_from_presentation(std::vector<WordTerm> presentation) const {
  State s;
  s.vector = evaluate(presentation);
  s.presentation = std::move(presentation);
  return s;
}

bool VertexEngine::is_frame_pair(int a, int b) const {
  if (space().family() == Family::C) return space().particle(a) == space().particle(b);
  return a == b;
}

State VertexEngine::lemma_state(int a, int b, int i, int j) const {
  if (i < 1 || j < 1) throw Error("lemma_state: i, j must be positive");
  if (is_frame_pair(a, b)) throw InvalidPair("lemma_state: " + space().label(a) + "," + space().label(b) + " is a frame pair");
  const auto frames = frame_fields();
  ModeWord word;
  auto push_frame = [&](int particle, int times) {
    for (int k = 0; k < times; ++k)
      word.push_back({std::get<1>(frames[particle].terms[0]), std::get<2>(frames[particle].terms[0]), 0});
  };
  push_frame(space().particle(a), i - 1);
  push_frame(space().particle(b), j - 1);
  word.push_back({a, b, -1});
  const Rational scale = 1 / (factorial(i - 1) * factorial(j - 1));
  State s = state_from_presentation({{scale, std::move(word)}});
  const ModuleVector direct = module_.apply(algebra().element(a, -i, b, -j), ModuleVector::vacuum());
  if (s.vector != direct) throw Error("lemma_state: presentation does not reproduce the state");
  return s;
}

ModuleVector VertexEngine::word_product(const ModeWord& word, std::size_t start, int n,
                                        const ModuleVector& w) const {
  if (w.is_zero()) return {};
  if (start == word.size()) return n == -1 ? w : ModuleVector();
  const ModeLetter& x = word[start];
  const int m1 = x.l;
  const int D = w.max_degree();
  int rest_weight = 0;
  for (std::size_t k = start + 1; k < word.size(); ++k) rest_weight += 1 - word[k].l;

  ModuleVector out;
  for (int i = 0; i <= rest_weight - 1 + D - n; ++i) {
    const Integer c = binomial(m1, i);
    if (c == 0) continue;
    ModuleVector inner = word_product(word, start + 1, n + i, w);
    if (inner.is_zero()) continue;
    out += (sign_power(i) * Rational(c)) * apply_mode(x.a, x.b, m1 - i, inner);
  }
  for (int i = 0; i <= D + 1; ++i) {
    const Integer c = binomial(m1, i);
    if (c == 0) continue;
    ModuleVector xw = apply_mode(x.a, x.b, i, w);
    if (xw.is_zero()) continue;
    out -= (sign_power(i + std::abs(m1)) * Rational(c)) * word_product(word, start + 1, m1 + n - i, xw);
  }
  return out;
}

ModuleVector VertexEngine::nth_product(const State& u, int n, const ModuleVector& w) const {
  if (u.vector.is_zero()) return {};
  if (u.presentation.empty()) throw NoPresentation("nth_product: state has no mode-word presentation");
  ModuleVector out;
  for (const auto& t : u.presentation) out += t.coef * word_product(t.word, 0, n, w);
  return out;
}

State VertexEngine::nth_product(const State& u, int n, const State& w) const {
  State out;
  out.vector = nth_product(u, n, w.vector);
  const bool generating = std::all_of(u.presentation.begin(), u.presentation.end(), [](const WordTerm& t) {
    return t.word.size() == 1 && t.word[0].l == -1;
  });
  if (generating && w.has_presentation() && !out.vector.is_zero()) {
    for (const auto& tu : u.presentation)
      for (const auto& tw : w.presentation) {
        ModeWord word{{tu.word[0].a, tu.word[0].b, n}};
        word.insert(word.end(), tw.word.begin(), tw.word.end());
        out.presentation.push_back({tu.coef * tw.coef, std::move(word)});
      }
  }
  return out;
}

std::optional<std::vector<WordTerm>> VertexEngine::find_presentation(const ModuleVector& v,
                                                                     const std::optional<Rational>& r0) const {
  if (v.is_zero()) return std::vector<WordTerm>{};
  if (!v.is_homogeneous()) throw DegreeMismatch("find_presentation: vector is not homogeneous");
  const int d = v.max_degree();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& g : jordan_basis(space())) pairs.push_back(g.terms().begin()->first);

  // rows keep vec = target-part + sum combo[w] * evaluate(words[w])
  struct Row {
    std::map<CoordKey, Rational> vec;
    std::map<std::size_t, Rational> combo;
  };
  std::map<CoordKey, Row> rows;
  std::vector<ModeWord> words;
  auto reduce = [&](Row& x) {
    auto it = x.vec.begin();
    while (it != x.vec.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      const CoordKey here = it->first;
      for (const auto& [k, c] : row->second.vec) {
        auto& slot = x.vec[k];
        slot -= f * c;
        if (slot == 0) x.vec.erase(k);
      }
      for (const auto& [k, c] : row->second.combo) {
        auto& slot = x.combo[k];
        slot -= f * c;
        if (slot == 0) x.combo.erase(k);
      }
      it = x.vec.upper_bound(here);
    }
  };
  auto coords = [&](const ModuleVector& x) {
    if (!r0) return coordinates(x);
    std::map<CoordKey, Rational> out;
    for (const auto& [mono, c] : x.evaluate_at(*r0)) out[{mono, 0}] = c;
    return out;
  };
  const auto target = coords(v);
  auto try_target = [&]() -> std::optional<std::vector<WordTerm>> {
    Row t{target, {}};
    reduce(t);
    if (!t.vec.empty()) return std::nullopt;
    std::vector<WordTerm> out;
    for (const auto& [k, c] : t.combo) out.push_back({-c, words[k]});
    return out;
  };
  auto offer = [&](ModeWord w) -> std::optional<std::vector<WordTerm>> {
    Row x{coords(evaluate(w)), {{words.size(), Rational(1)}}};
    words.push_back(std::move(w));
    reduce(x);
    if (x.vec.empty()) return std::nullopt;
    const Rational inv = 1 / x.vec.begin()->second;
    for (auto& [k, c] : x.vec) c *= inv;
    for (auto& [k, c] : x.combo) c *= inv;
    const CoordKey pivot = x.vec.begin()->first;
    rows.emplace(pivot, std::move(x));
    return try_target();
  };

  // breadth-first closure from v_r inside degrees <= d, one word per new direction
  const Rational sample = r0 ? *r0 : make_rational(1, 2);
  std::vector<EchelonBasis<PBWMonomial>> seen(d + 1);
  std::deque<std::pair<ModuleVector, ModeWord>> queue;
  seen[0].insert(ModuleVector::vacuum().evaluate_at(sample));
  queue.push_back({ModuleVector::vacuum(), {}});
  if (d == 0)
    if (auto p = offer({})) return p;
  while (!queue.empty()) {
    auto [x, word] = std::move(queue.front());
    queue.pop_front();
    const int dx = x.max_degree();
    for (int t = 0; t <= d; ++t)
      for (const auto& [a, b] : pairs) {
        ModuleVector next = apply_mode(a, b, dx + 1 - t, x);
        if (next.is_zero() || !seen[t].insert(next.evaluate_at(sample))) continue;
        ModeWord w{{a, b, dx + 1 - t}};
        w.insert(w.end(), word.begin(), word.end());
        if (t == d)
          if (auto p = offer(w)) return p;
        queue.push_back({std::move(next), std::move(w)});
      }
  }
  return std::nullopt;
}

std::vector<Field> VertexEngine::frame_fields() const {
  std::vector<Field> out;
  const auto& s = space();
  for (int i = 0; i < s.rank(); ++i)
    out.push_back(s.family() == Family::C ? Field::single(s.psi(i), s.psi_star(i)) : Field::single(i, i));
  return out;
}

Field VertexEngine::omega() const {
  Field w;
  for (const auto& f : frame_fields()) w.terms.insert(w.terms.end(), f.terms.begin(), f.terms.end());
  return w;
}

JordanElement VertexEngine::to_jordan(const ModuleVector& v) const {
  JordanElement x(jordan_type_of(space()), space());
  for (const auto& [mono, c] : v.terms()) {
    if (mono.size() != 1 || mono[0].m != -1 || mono[0].n != -1)
      throw DegreeMismatch("to_jordan: vector is not in the degree-2 generator span");
    if (!c.is_constant()) throw Error("to_jordan: coefficient depends on r");
    x.add(mono[0].a, mono[0].b, c.coefficient(0));
  }
  return x;
}

ModuleVector VertexEngine::from_jordan(const JordanElement& x) const {
  ModuleVector v;
  for (const auto& [key, c] : x.terms())
    v += module_.apply(algebra().element(key.first, -1, key.second, -1, c), ModuleVector::vacuum());
  return v;
}

ModuleVector griess_product(const VertexEngine& engine, const State& x, const State& y) {
  for (const State* s : {&x, &y})
    if (!s->vector.is_zero() && (!s->vector.is_homogeneous() || s->vector.max_degree() != 2))
      throw DegreeMismatch("griess_product: states must be homogeneous of degree 2");
  if (x.has_presentation()) return engine.nth_product(x, 1, y.vector);
  // every degree-2 vector is a combination of generating states
  const JordanElement jx = engine.to_jordan(x.vector);
  Field f;
  for (const auto& [key, c] : jx.terms()) f.terms.push_back({c, key.first, key.second});
  return engine.apply_mode(f, 1, y.vector);
}

Rational griess_jordan_factor(const SpaceSpec& space) {
  return space.family() == Family::C ? make_rational(1, 2) : Rational(1);
}

GriessReport griess_suite(const VertexEngine& engine) {
  GriessReport report;
  const auto& space = engine.space();
  const auto basis = jordan_basis(space);
  const auto half = griess_jordan_factor(space);
  auto state = [&](const JordanElement& j) { return VertexEngine::bare(engine.from_jordan(j)); };
  auto circ = [&](const JordanElement& p, const JordanElement& q) {
    return engine.to_jordan(half * griess_product(engine, state(p), state(q)));
  };
  auto note = [&](const std::string& s) {
    if (report.witnesses.size() < 10) report.witnesses.push_back(s);
  };

  for (const auto& x : basis)
    for (const auto& y : basis) {
      ++report.pairs;
      const ModuleVector xy = griess_product(engine, state(x), state(y));
      const ModuleVector yx = griess_product(engine, state(y), state(x));
      if (xy != yx) {
        report.symmetric = false;
        note("asymmetric: " + x.to_string() + " , " + y.to_string());
      }
      if (engine.to_jordan(half * xy) != jordan_product(x, y)) {
        report.jordan_isomorphism = false;
        note("jordan: " + x.to_string() + " , " + y.to_string());
      }
      if (space.family() == Family::C) {
        const auto [a, b] = x.terms().begin()->first;
        const auto [u, v] = y.terms().begin()->first;
        const Rational cx = x.terms().begin()->second * y.terms().begin()->second;
        const JordanType t = jordan_type_of(space);
        JordanElement printed(t, space);
        printed += JordanElement::generator(t, space, a, v, space.pairing(b, u));
        printed -= JordanElement::generator(t, space, a, u, space.pairing(b, v));
        printed -= JordanElement::generator(t, space, b, v, space.pairing(a, u));
        printed += JordanElement::generator(t, space, b, u, space.pairing(a, v));
        if (engine.to_jordan(xy) != cx * printed) {
          report.formula_holds = false;
          note("formula: " + x.to_string() + " , " + y.to_string());
        }
      }
    }

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const JordanElement x = basis[i] + make_rational(2, 1) * basis[(i + 1) % basis.size()];
    const JordanElement xx = circ(x, x);
    for (const auto& y : basis) {
      if (circ(circ(x, y), xx) != circ(x, circ(y, xx))) {
        report.jordan_identity = false;
        note("jordan identity: " + x.to_string() + " , " + y.to_string());
      }
    }
  }
  return report;
}

CentralCharge central_charge(const VertexEngine& engine) {
  CentralCharge out;
  auto c_of = [&](const Field& f) {
    const State s = engine.field_state(f);
    return RPoly(2) * engine.apply_mode(f, 3, s.vector).coefficient({});
  };
  out.omega_c = c_of(engine.omega());
  for (const auto& f : engine.frame_fields()) out.frame_c.push_back(c_of(f));
  return out;
}

VirasoroReport virasoro_suite(const VertexEngine& engine, int max_degree, int mode_span) {
  VirasoroReport report;
  const Field w = engine.omega();
  report.c = central_charge(engine).omega_c;
  auto note = [&](const std::string& s) {
    if (report.witnesses.size() < 10) report.witnesses.push_back(s);
  };
  const Rational r0 = make_rational(7, 3);

  for (int d = 0; d <= max_degree; ++d) {
    EchelonBasis<PBWMonomial> image;
    const auto basis = engine.module().basis(d);
    for (const auto& mono : basis) {
      ++report.vectors;
      const ModuleVector v = ModuleVector::basis_vector(mono);
      if (engine.apply_mode(w, 1, v) != RPoly(d) * v) {
        report.grading = false;
        note("grading: " + engine.module().to_string(v));
      }
      const ModuleVector t = engine.apply_mode(w, 0, v);
      if (!t.is_zero() && (!t.is_homogeneous() || t.max_degree() != d + 1)) report.translation = false;
      image.insert(t.evaluate_at(r0));

      std::map<int, ModuleVector> single;
      for (int n = -mode_span; n <= mode_span; ++n) single[n] = engine.apply_mode(w, n + 1, v);
      std::map<std::pair<int, int>, ModuleVector> twice;
      for (int m = -mode_span; m <= mode_span; ++m)
        for (int n = -mode_span; n <= mode_span; ++n) twice[{m, n}] = engine.apply_mode(w, m + 1, single[n]);
      for (int m = -mode_span; m <= mode_span; ++m)
        for (int n = -mode_span; n <= mode_span; ++n) {
          ++report.bracket_checks;
          ModuleVector lhs = twice[{m, n}] - twice[{n, m}];
          ModuleVector rhs = Rational(m - n) * engine.apply_mode(w, m + n + 1, v);
          if (m + n == 0) rhs += (make_rational(static_cast<long>(m) * m * m - m, 12) * report.c) * v;
          if (lhs != rhs) {
            report.bracket = false;
            note("bracket m=" + std::to_string(m) + " n=" + std::to_string(n) + " on " +
                 engine.module().to_string(v));
          }
        }
    }
    if (d > 0 && image.rank() != basis.size()) {
      report.translation = false;
      note("translation not injective in degree " + std::to_string(d));
    }
  }
  return report;
}

int locality_order(const VertexEngine& engine, const Field& x, const Field& y, int max_j) {
  const State ys = engine.field_state(y);
  int order = 0;
  for (int j = 0; j <= max_j; ++j)
    if (!engine.apply_mode(x, j, ys.vector).is_zero()) order = j + 1;
  return order;
}

bool borcherds_check(const VertexEngine& engine, const Field& x, const Field& y, int m, int n,
                     const ModuleVector& v) {
  const ModuleVector lhs = engine.apply_mode(x, m, engine.apply_mode(y, n, v)) -
                           engine.apply_mode(y, n, engine.apply_mode(x, m, v));
  const State ys = engine.field_state(y);
  ModuleVector rhs;
  for (int j = 0; j <= 3; ++j) {
    const Integer c = binomial(m, j);
    if (c == 0) continue;
    const State xy = engine.mode_state(x, j, ys);
    if (xy.vector.is_zero()) continue;
    rhs += Rational(c) * engine.nth_product(xy, m + n - j, v);
  }
  return lhs == rhs;
}

std::pair<int, int> generator_window(const ModuleVector& v, int s) {
  const int M = max_abs_mode(v);
  return {s - M, 2 * M - s};
}

ModuleVector lemma1_rhs(const VertexEngine& engine, int a, int b, int i, int j, int s, const ModuleVector& v) {
  const auto [t, N] = generator_window(v, s);
  ModuleVector out;
  for (int k = t; k <= t + N; ++k) {
    const Integer c = binomial(i + k - 1, i - 1) * binomial(j + s - k - 1, j - 1);
    if (c == 0) continue;
    const auto sg = engine.algebra().canonicalize(a, k, b, s - k);
    if (sg.is_zero()) continue;
    out += (sign_power(i + j) * Rational(c) * sg.sign) * engine.module().apply(sg.gen, v);
  }
  return out;
}

bool lemma1_identity_check(const VertexEngine& engine, int a, int b, int i, int j, int s, const ModuleVector& v,
                           bool allow_frame) {
  if (i < 1 || j < 1) throw Error("lemma1_identity_check: i, j must be positive");
  if (engine.is_frame_pair(a, b)) {
    if (!allow_frame) throw InvalidPair("lemma1_identity_check: frame pair");
    State u;
    u.vector = engine.module().apply(engine.algebra().element(a, -i, b, -j), ModuleVector::vacuum());
    auto pres = engine.find_presentation(u.vector);
    if (!pres) throw NoPresentation("lemma1_identity_check: no presentation found for the frame state");
    u.presentation = std::move(*pres);
    return engine.nth_product(u, s + i + j - 1, v) == lemma1_rhs(engine, a, b, i, j, s, v);
  }
  return engine.nth_product(engine.lemma_state(a, b, i, j), s + i + j - 1, v) == lemma1_rhs(engine, a, b, i, j, s, v);
}

bool lemma1_frame_check_at(const VertexEngine& engine, int a, int b, int i, int j, int s, const ModuleVector& v,
                           const Rational& r0) {
  const ModuleVector u = engine.module().apply(engine.algebra().element(a, -i, b, -j), ModuleVector::vacuum());
  auto pres = engine.find_presentation(u, r0);
  if (!pres) throw NoPresentation("lemma1_frame_check_at: no presentation found at the sample point");
  const State us{u, std::move(*pres)};
  return engine.nth_product(us, s + i + j - 1, v).evaluate_at(r0) == lemma1_rhs(engine, a, b, i, j, s, v).evaluate_at(r0);
}

VircomResult vircom_check(const VertexEngine& engine, int a, int b, int i, int j, int l, const ModuleVector& v) {
  const auto& space = engine.space();
  const auto frames = engine.frame_fields();
  const State u = engine.lemma_state(a, b, i, j);
  const ModuleVector uv = engine.nth_product(u, l, v);
  auto commutator = [&](const Field& x) {
    return engine.apply_mode(x, 0, uv) - engine.nth_product(u, l, engine.apply_mode(x, 0, v));
  };
  auto frame_of = [&](int c) { return frames[space.particle(c)]; };

  VircomResult out;
  const ModuleVector first = engine.nth_product(engine.lemma_state(a, b, i + 1, j), l, v);
  out.first_frame = first == make_rational(1, i) * commutator(frame_of(a));
  out.first_literal = first == make_rational(1, i) * commutator(Field::single(a, b));
  const ModuleVector second = engine.nth_product(engine.lemma_state(a, b, i, j + 1), l, v);
  out.second_frame = second == make_rational(1, j) * commutator(frame_of(b));
  return out;
}

QMatrix binomial_matrix(int t, int N) {
  if (N < 0) throw Error("binomial_matrix: N must be nonnegative");
  QMatrix a(N + 1, std::vector<Rational>(N + 1));
  for (int i = 1; i <= N + 1; ++i)
    for (int j = 1; j <= N + 1; ++j) a[i - 1][j - 1] = sign_power(i - 1) * Rational(binomial(t + i + j - 2, i - 1));
  return a;
}

Rational binomial_matrix_det(int t, int N) { return determinant(binomial_matrix(t, N)); }

std::vector<ModuleVector> generator_from_modes(const VertexEngine& engine, int a, int b, int s, int t, int N,
                                               const ModuleVector& v) {
  if (N < 0) throw SingularWindow("generator_from_modes: empty window");
  const QMatrix A = binomial_matrix(t, N);
  std::vector<ModuleVector> values;
  for (int i = 1; i <= N + 1; ++i) values.push_back(engine.nth_product(engine.lemma_state(a, b, i, 1), s + i, v));
  std::vector<ModuleVector> out(N + 1);
  for (int col = 0; col <= N; ++col) {
    std::vector<Rational> e(N + 1, Rational(0));
    e[col] = 1;
    // column col of A^{-1}
    const auto x = solve(A, e);
    if (!x) throw SingularWindow("generator_from_modes: singular binomial matrix");
    for (int row = 0; row <= N; ++row)
      if ((*x)[row] != 0) out[row] += (*x)[row] * values[col];
  }
  return out;
}

SpanReport span_check(const VertexEngine& engine, int max_degree, const Rational& r0) {
  const auto& space = engine.space();
  if (space.dim() <= 2) throw DimensionTooSmall("span_check: dim W must be at least 4");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& g : jordan_basis(space)) pairs.push_back(g.terms().begin()->first);

  std::vector<EchelonBasis<PBWMonomial>> ranks(max_degree + 1);
  std::deque<ModuleVector> queue;
  ranks[0].insert(ModuleVector::vacuum().evaluate_at(r0));
  queue.push_back(ModuleVector::vacuum());
  while (!queue.empty()) {
    const ModuleVector v = std::move(queue.front());
    queue.pop_front();
    const int d = v.max_degree();
    for (int target = 0; target <= max_degree; ++target)
      for (const auto& [a, b] : pairs) {
        ModuleVector next = engine.apply_mode(a, b, d + 1 - target, v);
        if (next.is_zero()) continue;
        if (ranks[target].insert(next.evaluate_at(r0))) queue.push_back(std::move(next));
      }
  }
  SpanReport report;
  for (int d = 0; d <= max_degree; ++d) {
    SpanDegree s{d, ranks[d].rank(), engine.module().graded_dimension(d)};
    if (s.rank != s.graded_dim) report.passed = false;
    report.degrees.push_back(s);
  }
  return report;
}

}  // namespace jvoa
