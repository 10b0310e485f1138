#include "jvoa/induced_module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "jvoa/errors.hpp"

namespace jvoa {

int monomial_degree(const PBWMonomial& mono) {
  int d = 0;
  for (const auto& g : mono) d -= g.m + g.n;
  return d;
}

PBWMonomial insert_factor(PBWMonomial mono, const Generator& g) {
  mono.insert(std::upper_bound(mono.begin(), mono.end(), g), g);
  return mono;
}

ModuleVector ModuleVector::basis_vector(const PBWMonomial& mono, const RPoly& c) {
  ModuleVector v;
  v.add(mono, c);
  return v;
}

RPoly ModuleVector::coefficient(const PBWMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? RPoly() : it->second;
}

void ModuleVector::add(const PBWMonomial& mono, const RPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const RPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

int ModuleVector::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool ModuleVector::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = monomial_degree(m);
    if (d >= 0 && k != d) return false;
    d = k;
  }
  return true;
}

ModuleVector ModuleVector::component(int degree) const {
  ModuleVector out;
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == degree) out.terms_.emplace(m, c);
  return out;
}

std::map<PBWMonomial, Rational> ModuleVector::evaluate_at(const Rational& r0) const {
  std::map<PBWMonomial, Rational> out;
  for (const auto& [m, c] : terms_) {
    Rational x = c.evaluate_at(r0);
    if (x != 0) out.emplace(m, x);
  }
  return out;
}

ModuleVector InducedModule::apply(const Generator& g, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [mono, c] : v.terms()) {
    const auto& img = apply(g, mono);
    if (img.is_zero()) continue;
    if (c.is_constant()) {
      const Rational k = c.coefficient(0);
      for (const auto& [m2, c2] : img.terms()) out.add(m2, c2 * k);
    } else {
      for (const auto& [m2, c2] : img.terms()) out.add(m2, c2 * c);
    }
  }
  return out;
}

ModuleVector InducedModule::apply(const SignedGenerator& g, const ModuleVector& v) const {
  if (g.is_zero()) return {};
  auto out = apply(g.gen, v);
  if (g.sign != 1) out *= Rational(g.sign);
  return out;
}

ModuleVector InducedModule::apply(const GenCombination& x, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [g, c] : x.terms()) {
    auto t = apply(g, v);
    t *= c;
    out += t;
  }
  if (x.k_coeff() != 0) out += (RPoly::r() * x.k_coeff()) * v;
  return out;
}

const ModuleVector& InducedModule::apply(const Generator& g, const PBWMonomial& mono) const {
  auto key = std::make_pair(g, mono);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  ModuleVector value = compute(g, mono);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

ModuleVector InducedModule::compute(const Generator& g, const PBWMonomial& mono) const {
  if (g.is_creation()) return ModuleVector::basis_vector(insert_factor(mono, g));
  if (mono.empty()) return {};
  if (monomial_degree(mono) - g.mode_sum() < 0) return {};

  // g X rest = X (g rest) + [g, X] rest
  const Generator& x = mono.front();
  const PBWMonomial rest(mono.begin() + 1, mono.end());
  ModuleVector out;
  for (const auto& [m2, c2] : apply(g, rest).terms()) out.add(insert_factor(m2, x), c2);
  const GenCombination comm = algebra_.bracket(g, x);
  for (const auto& [h, c] : comm.terms()) {
    for (const auto& [m2, c2] : apply(h, rest).terms()) out.add(m2, c2 * c);
  }
  if (comm.k_coeff() != 0) out.add(rest, RPoly::monomial(comm.k_coeff(), 1));
  return out;
}

std::vector<Generator> InducedModule::creation_generators(int k) const {
  std::vector<Generator> out;
  const int dim = space().dim();
  for (int m = -(k - 1); m <= -1; ++m) {
    const int n = -k - m;
    if (n > -1) continue;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        auto s = algebra_.canonicalize(a, m, b, n);
        if (s.is_zero() || s.gen.m != m || s.gen.a != a) continue;
        out.push_back(s.gen);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PBWMonomial> InducedModule::basis(int d) const {
  if (d < 0) return {};
  std::vector<Generator> gens;
  for (int k = 2; k <= d; ++k) {
    auto g = creation_generators(k);
    gens.insert(gens.end(), g.begin(), g.end());
  }
  std::sort(gens.begin(), gens.end());
  std::vector<PBWMonomial> out;
  PBWMonomial current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      const int k = -gens[i].mode_sum();
      if (k > remaining) continue;
      current.push_back(gens[i]);
      rec(i, remaining - k);
      current.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::string InducedModule::to_string(const PBWMonomial& mono) const {
  std::ostringstream os;
  for (const auto& g : mono) os << algebra_.to_string(g) << " ";
  os << "v_r";
  return os.str();
}

std::string InducedModule::to_string(const ModuleVector& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << to_string(m);
  }
  return os.str();
}

std::size_t InducedModule::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::size_t graded_dimension(const SpaceSpec& space, int d) {
  return InducedModule(LoopAlgebra(space)).graded_dimension(d);
}

IdealReport ideal_annihilation_check(const InducedModule& module, int max_degree) {
  IdealReport report;
  const auto& alg = module.algebra();
  const int dim = module.space().dim();
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& mono : module.basis(d)) {
      const auto v = ModuleVector::basis_vector(mono);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          for (int m = -(max_degree + 1); m <= max_degree + 1; ++m) {
            auto g = alg.canonicalize(a, 0, b, m);
            if (g.is_zero()) continue;
            ++report.checks;
            auto img = module.apply(g, v);
            if (!img.is_zero()) {
              report.passed = false;
              if (report.witnesses.size() < 10)
                report.witnesses.push_back(alg.to_string(g.gen) + " on " + module.to_string(mono));
            }
          }
    }
  }
  return report;
}

}  // namespace jvoa
