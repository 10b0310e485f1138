#include "jvoa/fermion_fock.hpp"

#include <algorithm>
#include <functional>

#include "jvoa/errors.hpp"
#include "jvoa/linalg.hpp"

namespace jvoa {

int fermion_degree(const FermionMonomial& mono) {
  int d = 0;
  for (const auto& [m, a] : mono) d -= m;
  return d;
}

void fermion_add(FermionVector& v, const FermionMonomial& mono, const Rational& c) {
  if (c == 0) return;
  auto& slot = v[mono];
  slot += c;
  if (slot == 0) v.erase(mono);
}

FermionFock::FermionFock(SpaceSpec space) : space_(space) {
  if (space.family() != Family::C) throw UnsupportedFamily("the fermionic oracle needs a symplectic space");
}

Rational FermionFock::anticommutator(int a, int m, int b, int n) const {
  if (m + n != 0) return 0;
  return Rational(m * space_.pairing(a, b));
}

FermionVector FermionFock::apply(int a, int m, const FermionVector& v) const {
  space_.check_index(a);
  FermionVector out;
  if (m == 0) return out;
  const FermionMode f{m, a};
  for (const auto& [mono, c] : v) {
    if (m < 0) {
      auto pos = std::lower_bound(mono.begin(), mono.end(), f);
      if (pos != mono.end() && *pos == f) continue;
      const long before = pos - mono.begin();
      FermionMonomial next = mono;
      next.insert(next.begin() + before, f);
      fermion_add(out, next, before % 2 == 0 ? c : Rational(-c));
    } else {
      for (std::size_t p = 0; p < mono.size(); ++p) {
        const Rational k = anticommutator(a, m, mono[p].second, mono[p].first);
        if (k == 0) continue;
        FermionMonomial next = mono;
        next.erase(next.begin() + static_cast<long>(p));
        fermion_add(out, next, (p % 2 == 0 ? c : Rational(-c)) * k);
      }
    }
  }
  return out;
}

FermionVector FermionFock::quadratic(int a, int m, int b, int n, const FermionVector& v) const {
  if (m == 0 || n == 0) return {};
  if (m > 0 && n < 0) {
    auto out = apply(b, n, apply(a, m, v));
    for (auto& [k, c] : out) c = -c;
    return out;
  }
  return apply(a, m, apply(b, n, v));
}

FermionVector FermionFock::quadratic(const Generator& g, const FermionVector& v) const {
  return quadratic(g.a, g.m, g.b, g.n, v);
}

FermionVector FermionFock::quadratic(const GenCombination& x, const FermionVector& v) const {
  FermionVector out;
  for (const auto& [g, c] : x.terms())
    for (const auto& [mono, k] : quadratic(g, v)) fermion_add(out, mono, c * k);
  if (x.k_coeff() != 0)
    for (const auto& [mono, k] : v) fermion_add(out, mono, x.k_coeff() * k);
  return out;
}

FermionVector FermionFock::evaluate_at_r1(const ModuleVector& v) const {
  FermionVector out;
  for (const auto& [mono, c] : v.terms()) {
    const Rational c1 = c.evaluate_at(1);
    if (c1 == 0) continue;
    FermionVector state{{FermionMonomial{}, c1}};
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) state = quadratic(*it, state);
    for (const auto& [m, k] : state) fermion_add(out, m, k);
  }
  return out;
}

std::vector<FermionMonomial> FermionFock::basis(int d) const {
  std::vector<FermionMonomial> out;
  if (d < 0) return out;
  std::vector<FermionMode> modes;
  for (int m = -d; m <= -1; ++m)
    for (int a = 0; a < space_.dim(); ++a) modes.push_back({m, a});
  FermionMonomial current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < modes.size(); ++i) {
      if (-modes[i].first > remaining) continue;
      current.push_back(modes[i]);
      rec(i + 1, remaining + modes[i].first);
      current.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FermionFock::graded_dimension(int d) const { return basis(d).size(); }

std::size_t FermionFock::even_graded_dimension(int d) const {
  std::size_t count = 0;
  for (const auto& m : basis(d))
    if (m.size() % 2 == 0) ++count;
  return count;
}

KernelRank kernel_rank(const InducedModule& module, const FermionFock& fock, int d) {
  KernelRank out;
  EchelonBasis<FermionMonomial> image;
  for (const auto& mono : module.basis(d)) {
    ++out.pbw_dim;
    image.insert(fock.evaluate_at_r1(ModuleVector::basis_vector(mono)));
  }
  out.image_dim = image.rank();
  out.kernel_dim = out.pbw_dim - out.image_dim;
  return out;
}

CliffordElement CliffordElement::scalar(const Rational& c) {
  CliffordElement x;
  if (c != 0) x.terms_[{}] = c;
  return x;
}

void CliffordElement::add_normal_ordered(const FermionFock& fock, Word w, const Rational& c) {
  if (c == 0) return;
  for (const auto& f : w)
    if (f.first == 0) return;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return;  // x x = {x,x}/2 = 0
    if (w[i] < w[i + 1]) continue;
    // x y = -y x + {x, y}
    const Rational k = fock.anticommutator(w[i].second, w[i].first, w[i + 1].second, w[i + 1].first);
    if (k != 0) {
      Word shorter;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i && j != i + 1) shorter.push_back(w[j]);
      add_normal_ordered(fock, std::move(shorter), c * k);
    }
    std::swap(w[i], w[i + 1]);
    add_normal_ordered(fock, std::move(w), -c);
    return;
  }
  auto& slot = terms_[w];
  slot += c;
  if (slot == 0) terms_.erase(w);
}

CliffordElement CliffordElement::quadratic(int a, int m, int b, int n) {
  CliffordElement x;
  if (m == 0 || n == 0) return x;
  // reordering without contraction constants
  Word w{{m, a}, {n, b}};
  Rational sign = 1;
  if (w[1] < w[0]) {
    std::swap(w[0], w[1]);
    sign = -1;
  }
  if (w[0] == w[1]) return x;
  x.terms_[w] = sign;
  return x;
}

CliffordElement CliffordElement::quadratic(const GenCombination& g) {
  CliffordElement x = scalar(g.k_coeff());
  for (const auto& [gen, c] : g.terms()) {
    auto q = quadratic(gen.a, gen.m, gen.b, gen.n);
    for (const auto& [w, k] : q.terms_) {
      auto& slot = x.terms_[w];
      slot += c * k;
      if (slot == 0) x.terms_.erase(w);
    }
  }
  return x;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  for (const auto& [w, c] : other.terms_) {
    auto& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
  }
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  for (const auto& [w, c] : other.terms_) {
    auto& slot = terms_[w];
    slot -= c;
    if (slot == 0) terms_.erase(w);
  }
  return *this;
}

CliffordElement CliffordElement::multiply(const FermionFock& fock, const CliffordElement& x,
                                          const CliffordElement& y) {
  CliffordElement out;
  for (const auto& [wx, cx] : x.terms_)
    for (const auto& [wy, cy] : y.terms_) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add_normal_ordered(fock, std::move(w), cx * cy);
    }
  return out;
}

CliffordElement CliffordElement::commutator(const FermionFock& fock, const CliffordElement& x,
                                            const CliffordElement& y) {
  auto out = multiply(fock, x, y);
  out -= multiply(fock, y, x);
  return out;
}

OracleReport bracket_oracle_check(const LoopAlgebra& algebra, const FermionFock& fock, int mode_span) {
  std::vector<Generator> gens;
  std::vector<CliffordElement> images;
  const int dim = algebra.space().dim();
  for (int m = -mode_span; m <= mode_span; ++m)
    for (int a = 0; a < dim; ++a)
      for (int n = -mode_span; n <= mode_span; ++n)
        for (int b = 0; b < dim; ++b) {
          auto s = algebra.canonicalize(a, m, b, n);
          if (s.is_zero() || s.sign != 1 || s.gen != Generator{m, a, n, b}) continue;
          gens.push_back(s.gen);
          images.push_back(CliffordElement::quadratic(a, m, b, n));
        }
  OracleReport report;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      ++report.pairs;
      auto lhs = CliffordElement::commutator(fock, images[i], images[j]);
      auto rhs = CliffordElement::quadratic(algebra.bracket(gens[i], gens[j]));
      if (lhs == rhs) continue;
      report.passed = false;
      if (report.witnesses.size() < 10)
        report.witnesses.push_back(algebra.to_string(gens[i]) + " , " + algebra.to_string(gens[j]));
    }
  return report;
}

}  // namespace jvoa
