#pragma once

// Test-side oracles, kept independent of the library's span/center machinery:
// dense flattening, local block products, dense rank and the commutant
// system are all implemented here from scratch.

#include <algorithm>
#include <map>
#include <vector>

#include "algebra.hpp"

namespace afb_test {

using afb::Element;
using afb::MultiMatrixAlgebra;
using afb::Scalar;
using afb::UnitIndex;

// Dense per-block matrices of one element.
using BlockMatrices = std::vector<std::vector<std::vector<Scalar>>>;

inline BlockMatrices to_blocks(const Element& e) {
  const MultiMatrixAlgebra& alg = e.algebra();
  BlockMatrices m(static_cast<size_t>(alg.num_blocks()));
  for (int b = 0; b < alg.num_blocks(); ++b)
    m[static_cast<size_t>(b)].assign(
        static_cast<size_t>(alg.block_size(b)),
        std::vector<Scalar>(static_cast<size_t>(alg.block_size(b))));
  for (const auto& [idx, v] : e.entries())
    m[static_cast<size_t>(idx.block)][static_cast<size_t>(idx.row)]
     [static_cast<size_t>(idx.col)] = v;
  return m;
}

inline BlockMatrices block_product(const BlockMatrices& a, const BlockMatrices& b) {
  BlockMatrices c(a.size());
  for (size_t blk = 0; blk < a.size(); ++blk) {
    size_t n = a[blk].size();
    c[blk].assign(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (a[blk][i][k].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) c[blk][i][j] += a[blk][i][k] * b[blk][k][j];
      }
  }
  return c;
}

inline std::vector<Scalar> flatten(const BlockMatrices& m) {
  std::vector<Scalar> v;
  for (const auto& blk : m)
    for (const auto& row : blk)
      for (const Scalar& x : row) v.push_back(x);
  return v;
}

// Rank of a list of dense vectors by straightforward elimination.
inline int dense_vector_rank(std::vector<std::vector<Scalar>> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = rows.size();
    for (size_t i = r; i < rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    Scalar inv = Scalar::one() / rows[r][c];
    for (size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Scalar f = rows[i][c];
      if (f.is_zero()) continue;
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++rank;
    ++r;
  }
  return rank;
}

// Linear-span rank of a family of elements.
inline int span_rank(const std::vector<Element>& span) {
  std::vector<std::vector<Scalar>> rows;
  for (const Element& e : span) rows.push_back(flatten(to_blocks(e)));
  return dense_vector_rank(std::move(rows));
}

// Dimension of the commutant-within-the-span: solутions v in span(basis) with
// v b = b v for every basis vector, computed densely from scratch.
inline int center_dim(const std::vector<Element>& span) {
  // Reduce the spanning family to an independent list first.
  std::vector<Element> basis;
  std::vector<std::vector<Scalar>> rows;
  for (const Element& e : span) {
    rows.push_back(flatten(to_blocks(e)));
    basis.push_back(e);
    if (dense_vector_rank(rows) < static_cast<int>(rows.size())) {
      rows.pop_back();
      basis.pop_back();
    }
  }
  size_t d = basis.size();
  if (d == 0) return 0;
  std::vector<BlockMatrices> mats;
  for (const Element& e : basis) mats.push_back(to_blocks(e));
  // Unknowns: coefficients x_i of v = sum x_i b_i. Equations per basis b_j:
  // flatten(sum_i x_i (b_i b_j - b_j b_i)) = 0.
  std::vector<std::vector<Scalar>> system; // rows over unknowns
  for (size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Scalar>> columns;
    for (size_t i = 0; i < d; ++i) {
      BlockMatrices ab = block_product(mats[i], mats[j]);
      BlockMatrices ba = block_product(mats[j], mats[i]);
      std::vector<Scalar> fa = flatten(ab);
      std::vector<Scalar> fb = flatten(ba);
      for (size_t k = 0; k < fa.size(); ++k) fa[k] -= fb[k];
      columns.push_back(std::move(fa));
    }
    for (size_t k = 0; k < columns[0].size(); ++k) {
      std::vector<Scalar> row(d);
      bool nonzero = false;
      for (size_t i = 0; i < d; ++i) {
        row[i] = columns[i][k];
        nonzero = nonzero || !row[i].is_zero();
      }
      if (nonzero) system.push_back(std::move(row));
    }
  }
  int rank = system.empty() ? 0 : dense_vector_rank(system);
  return static_cast<int>(d) - rank;
}

// Multisets of positive n with sum of squares = dim and count = parts.
inline std::vector<std::vector<int>> square_partitions(int dim, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // descending enumeration
  auto rec = [&](auto&& self, int remaining, int left, int max_part) -> void {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int n = max_part; n >= 1; --n) {
      if (n * n > remaining) continue;
      if (remaining - n * n > (left - 1) * n * n) continue; // cannot fill descending
      cur.push_back(n);
      self(self, remaining - n * n, left - 1, n);
      cur.pop_back();
    }
  };
  int max_part = 1;
  while (max_part * max_part < dim) ++max_part;
  rec(rec, dim, parts, max_part);
  return out;
}

// The spec-style decomposition oracle: independent span rank + commutant
// dimension; summand sizes follow when the square partition is unique.
struct DecompositionOracle {
  int dimension;
  int num_summands;
  std::vector<int> sizes_descending; // only when the partition is unique
  bool unique;
};

inline DecompositionOracle oracle_decomposition(const std::vector<Element>& span) {
  DecompositionOracle o{};
  o.dimension = span_rank(span);
  o.num_summands = center_dim(span);
  auto parts = square_partitions(o.dimension, o.num_summands);
  o.unique = parts.size() == 1;
  if (o.unique) o.sizes_descending = parts.front();
  return o;
}

} // namespace afb_test
