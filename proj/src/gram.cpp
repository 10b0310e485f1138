#include "jvoa/gram.hpp"

#include "jvoa/errors.hpp"

namespace jvoa {

RPoly pairing(const InducedModule& module, const PBWMonomial& x, const PBWMonomial& y) {
  if (monomial_degree(x) != monomial_degree(y)) return RPoly();
  const auto& alg = module.algebra();
  ModuleVector w = ModuleVector::basis_vector(y);
  for (const auto& g : x) {
    w = module.apply(alg.adjoint(g), w);
    if (w.is_zero()) return RPoly();
  }
  return w.coefficient({});
}

RPoly pairing(const InducedModule& module, const ModuleVector& x, const ModuleVector& y) {
  RPoly out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const RPoly p = pairing(module, mx, my);
      if (!p.is_zero()) out += cx * cy * p;
    }
  return out;
}

bool GramMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

GramMatrix gram_matrix(const InducedModule& module, int d) {
  GramMatrix g;
  g.degree = d;
  g.basis = module.basis(d);
  const std::size_t n = g.basis.size();
  g.entries.assign(n, std::vector<RPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.entries[i][j] = pairing(module, g.basis[i], g.basis[j]);
  return g;
}

GramAnalysis gram_analysis(const GramMatrix& gram, const std::vector<Rational>& sample_points) {
  GramAnalysis out;
  out.degree = gram.degree;
  out.dimension = gram.basis.size();
  out.det = block_determinant(gram.entries);
  if (out.det.is_zero()) throw ZeroPolynomial("gram_analysis: determinant vanishes identically");
  out.integer_roots = integer_roots(out.det);
  for (const auto& r0 : sample_points) out.rank_at[r0] = rank(evaluate_at(gram.entries, r0));
  return out;
}

GramAnalysis gram_analysis(const InducedModule& module, int d, const std::vector<Rational>& sample_points) {
  return gram_analysis(gram_matrix(module, d), sample_points);
}

namespace {

// Is the specialized vector orthogonal to every basis vector of its degree?
bool in_radical(const QMatrix& gram, const std::vector<PBWMonomial>& basis, const std::map<PBWMonomial, Rational>& v) {
  std::vector<Rational> coords(basis.size(), Rational(0));
  for (const auto& [mono, c] : v) {
    auto it = std::lower_bound(basis.begin(), basis.end(), mono);
    if (it == basis.end() || *it != mono) return false;
    coords[it - basis.begin()] = c;
  }
  for (const auto& row : gram) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (coords[j] != 0) s += row[j] * coords[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

SingularVectors singular_vectors(const InducedModule& module, int d, const Rational& r0) {
  SingularVectors out;
  out.degree = d;
  out.r0 = r0;
  std::map<int, GramMatrix> grams;
  std::map<int, QMatrix> specialized;
  auto gram_at = [&](int k) -> const QMatrix& {
    if (!specialized.count(k)) {
      grams.emplace(k, gram_matrix(module, k));
      specialized.emplace(k, evaluate_at(grams.at(k).entries, r0));
    }
    return specialized.at(k);
  };
  gram_at(d);
  const auto& basis = grams.at(d).basis;
  for (const auto& k : kernel(specialized.at(d))) {
    ModuleVector v;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] != 0) v.add(basis[j], RPoly(k[j]));
    out.vectors.push_back(std::move(v));
  }

  const auto& alg = module.algebra();
  const int dim = module.space().dim();
  for (int shift = 0; shift <= d; ++shift) {
    if (out.vectors.empty()) break;
    const QMatrix& target = gram_at(d - shift);
    const auto& target_basis = grams.at(d - shift).basis;
    for (int m = -(d + 1); m <= d + 1; ++m) {
      const int n = shift - m;
      if (m < 0 && n < 0) continue;
      if (std::abs(n) > d + 1) continue;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          const auto sg = alg.canonicalize(a, m, b, n);
          if (sg.is_zero() || sg.gen != Generator{m, a, n, b}) continue;
          for (std::size_t i = 0; i < out.vectors.size(); ++i) {
            ++out.closure_checks;
            const auto image = module.apply(sg.gen, out.vectors[i]).evaluate_at(r0);
            if (in_radical(target, target_basis, image)) continue;
            out.closure_verified = false;
            if (out.witnesses.size() < 10)
              out.witnesses.push_back(alg.to_string(sg.gen) + " on radical vector " + std::to_string(i));
          }
        }
    }
  }
  return out;
}

}  // namespace jvoa
