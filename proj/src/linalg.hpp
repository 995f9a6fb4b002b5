#pragma once

#include <optional>
#include <vector>

#include "algebra.hpp"

namespace afb {

// Echelonized basis of a linear span of elements, with pivots ordered by
// (block,row,col). Supports exact reduction and membership tests.
class SpanBasis {
public:
  SpanBasis() = default;
  explicit SpanBasis(const std::vector<Element>& spanning);

  // Residual of x after subtracting its projection onto the span.
  Element reduce(const Element& x) const;

  // Adds x to the basis if independent; returns true if the basis grew.
  bool insert(const Element& x);

  bool contains(const Element& x) const { return reduce(x).is_zero(); }

  // Coefficients of x over the current basis vectors, or nullopt if x is
  // outside the span.
  std::optional<std::vector<Scalar>> coordinates(const Element& x) const;

  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<Element>& rows() const { return rows_; }

private:
  // rows_ sorted by leading index; each row has leading coefficient 1.
  std::vector<Element> rows_;
};

// Coefficients of x over a family of elements with pairwise distinct leading
// indices (a triangular family), or nullopt if x is outside its span.
std::optional<std::vector<Scalar>> expand_by_leading(const std::vector<Element>& family,
                                                     const Element& x);

// Dense exact matrices, used for the small linear systems behind center
// computation, minimal polynomials and coordinate solves.
using DenseMatrix = std::vector<std::vector<Scalar>>;

int dense_rank(DenseMatrix m);

// Basis of the right nullspace of m (columns = unknowns).
std::vector<std::vector<Scalar>> dense_nullspace(DenseMatrix m, int num_cols);

// One solution x of m x = rhs, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> dense_solve(DenseMatrix m, std::vector<Scalar> rhs);

} // namespace afb
