#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jvoa/rational.hpp"
#include "jvoa/rpoly.hpp"

namespace jvoa {

using QMatrix = std::vector<std::vector<Rational>>;
using PMatrix = std::vector<std::vector<RPoly>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& a);
std::size_t rank(QMatrix a);
/// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel(QMatrix a);
/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(QMatrix a, std::vector<Rational> b);
Rational determinant(QMatrix a);

QMatrix evaluate_at(const PMatrix& m, const Rational& r0);

/// Fraction-free Bareiss elimination over Q[r].
RPoly bareiss_determinant(PMatrix a);
/// Determinant as the product over connected blocks of the nonzero pattern
/// (rows and columns permuted together).
RPoly block_determinant(const PMatrix& a);
std::vector<std::vector<std::size_t>> connected_blocks(const PMatrix& a);

/// Incrementally grown row-echelon basis of sparse vectors keyed by K.
template <class Key>
class EchelonBasis {
 public:
  using Vector = std::map<Key, Rational>;

  /// Reduces v against the basis; returns true (and stores it) when v is
  /// independent of what is already there.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    const Key pivot = v.begin()->first;
    const Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Vector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      const Key here = it->first;
      for (const auto& [k, c] : row->second) {
        auto& slot = v[k];
        slot -= f * c;
        if (slot == 0) v.erase(k);
      }
      it = v.upper_bound(here);
    }
  }

  std::map<Key, Vector> rows_;
};

}  // namespace jvoa
