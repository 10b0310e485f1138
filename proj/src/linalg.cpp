#include "jvoa/linalg.hpp"

#include <numeric>

#include "jvoa/errors.hpp"

namespace jvoa {

std::vector<std::size_t> row_reduce(QMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix a) { return row_reduce(a).size(); }

std::vector<std::vector<Rational>> kernel(QMatrix a) {
  std::vector<std::vector<Rational>> out;
  if (a.empty()) return out;
  const std::size_t cols = a[0].size();
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(QMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error("solve: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("solve: matrix is not square");
    a[i].push_back(b[i]);
  }
  auto pivots = row_reduce(a);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = 1 / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

QMatrix evaluate_at(const PMatrix& m, const Rational& r0) {
  QMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& p : m[i]) out[i].push_back(p.evaluate_at(r0));
  }
  return out;
}

RPoly bareiss_determinant(PMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return RPoly(1);
  RPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return RPoly();
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() ? num * (1 / prev.coefficient(0)) : RPoly::exact_quotient(num, prev);
      }
      a[i][k] = RPoly();
    }
    prev = a[k][k];
  }
  return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<std::vector<std::size_t>> connected_blocks(const PMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i][j].is_zero()) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

RPoly block_determinant(const PMatrix& a) {
  RPoly det(1);
  for (const auto& block : connected_blocks(a)) {
    PMatrix sub(block.size(), std::vector<RPoly>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) sub[i][j] = a[block[i]][block[j]];
    det *= bareiss_determinant(std::move(sub));
    if (det.is_zero()) return det;
  }
  return det;
}

}  // namespace jvoa
