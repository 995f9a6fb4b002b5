#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace afb {

// A finite direct sum of full matrix algebras, described by its block sizes.
// An empty size list is the zero algebra.
class MultiMatrixAlgebra {
public:
  MultiMatrixAlgebra() = default;
  explicit MultiMatrixAlgebra(std::vector<int> sizes);

  int num_blocks() const { return static_cast<int>(sizes_.size()); }
  int block_size(int block) const { return sizes_.at(static_cast<size_t>(block)); }
  const std::vector<int>& sizes() const { return sizes_; }
  bool is_zero_algebra() const { return sizes_.empty(); }

  // Linear dimension: sum of n_i^2.
  std::int64_t dimension() const;

  friend bool operator==(const MultiMatrixAlgebra& a, const MultiMatrixAlgebra& b) {
    return a.sizes_ == b.sizes_;
  }
  friend bool operator!=(const MultiMatrixAlgebra& a, const MultiMatrixAlgebra& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  std::vector<int> sizes_;
};

// Position of a matrix unit e_{row,col} inside one block. 0-based internally;
// reports and documentation use 1-based positions.
struct UnitIndex {
  int block = 0;
  int row = 0;
  int col = 0;

  auto operator<=>(const UnitIndex&) const = default;
};

// Element of a multi-matrix algebra with exact complex-rational entries,
// stored sparsely as sorted (position, value) pairs with nonzero values.
class Element {
public:
  Element() = default;
  explicit Element(MultiMatrixAlgebra algebra) : algebra_(std::move(algebra)) {}
  Element(MultiMatrixAlgebra algebra, std::vector<std::pair<UnitIndex, Scalar>> entries);

  static Element matrix_unit(const MultiMatrixAlgebra& algebra, const UnitIndex& idx);
  static Element unit(const MultiMatrixAlgebra& algebra); // identity of the algebra
  static Element zero(const MultiMatrixAlgebra& algebra) { return Element(algebra); }

  const MultiMatrixAlgebra& algebra() const { return algebra_; }
  const std::vector<std::pair<UnitIndex, Scalar>>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  Scalar coeff(const UnitIndex& idx) const;

  // First nonzero position in (block,row,col) order; element must be nonzero.
  UnitIndex leading_index() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b); // blockwise product
  Element scaled(const Scalar& c) const;
  Element adjoint() const; // blockwise conjugate transpose

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  bool is_projection() const; // a*a == a and a* == a, exactly
  bool is_self_adjoint() const;

  // Blocks carrying at least one nonzero entry, ascending.
  std::vector<int> support_blocks() const;

  // Exact rank of each block, by Gaussian elimination.
  std::vector<int> block_ranks() const;

  std::string str() const;

private:
  void add_entry(const UnitIndex& idx, const Scalar& v); // accumulate, used by ops
  void check_bounds(const UnitIndex& idx) const;

  MultiMatrixAlgebra algebra_;
  std::vector<std::pair<UnitIndex, Scalar>> entries_;
};

Element commutator(const Element& a, const Element& b); // ab - ba

// The two-sided ideal of a multi-matrix algebra generated by a set of
// elements is a direct sum of whole blocks: exactly the blocks where some
// generator is nonzero. Returns those block indices, ascending.
std::vector<int> ideal_generated_by(const MultiMatrixAlgebra& algebra,
                                    const std::vector<Element>& generators);

// Membership test matching ideal_generated_by: an element lies in the ideal
// iff its support is contained in the given block set.
bool ideal_contains(const std::vector<int>& ideal_blocks, const Element& x);

} // namespace afb
