#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace afb {

// Nonnegative integer matrix recording, for a homomorphism between
// multi-matrix algebras, how many copies of each source block land in each
// target block. Rows index target blocks, columns source blocks.
class MultiplicityMatrix {
public:
  MultiplicityMatrix() = default;
  static MultiplicityMatrix zero(int rows, int cols);
  MultiplicityMatrix(std::vector<std::vector<std::int64_t>> entries);
  MultiplicityMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t at(int r, int c) const { return entries_.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)); }
  std::int64_t& at(int r, int c) { return entries_.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)); }

  static MultiplicityMatrix identity(int n);

  friend MultiplicityMatrix operator*(const MultiplicityMatrix& a, const MultiplicityMatrix& b);
  friend bool operator==(const MultiplicityMatrix& a, const MultiplicityMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const MultiplicityMatrix& a, const MultiplicityMatrix& b) {
    return !(a == b);
  }

  // Product with an integer vector (dimension vectors, K-theory classes).
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  std::string str() const; // rows ';'-separated, entries space-separated

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<std::int64_t>> entries_;
};

// A concrete *-homomorphism between multi-matrix algebras: for each target
// block, an injective assignment of slots (source block, copy, coordinate)
// to target coordinates. Unassigned target coordinates are zero padding.
//
// The induced map sends e^{(i)}_{r,s} to the sum over target blocks j and
// copies c of E^{(j)}_{pos(i,c,r), pos(i,c,s)}.
//
// Copies within each (target block, source block) pair are kept sorted by
// their coordinate tuples. That normal form makes composition associative
// and makes wiring equality coincide with equality of the induced maps.
class Wiring {
public:
  // slots[j][i] lists the copies of source block i inside target block j;
  // each copy is the vector of target coordinates for source coordinates
  // 0..n_i-1. Throws unless assignments are in bounds and injective per
  // target block.
  Wiring(MultiMatrixAlgebra source, MultiMatrixAlgebra target,
         std::vector<std::vector<std::vector<std::vector<int>>>> slots);

  static Wiring identity(const MultiMatrixAlgebra& algebra);

  // Canonical wiring for a multiplicity matrix: slots packed consecutively in
  // (source block, copy, coordinate) order, padding at the end of each target
  // block. Requires sum_i N[j,i]*n_i <= n'_j for every row j.
  static Wiring standard(const MultiMatrixAlgebra& source, const MultiMatrixAlgebra& target,
                         const MultiplicityMatrix& n);

  const MultiMatrixAlgebra& source() const { return source_; }
  const MultiMatrixAlgebra& target() const { return target_; }

  int copies(int target_block, int source_block) const {
    return static_cast<int>(slots_[static_cast<size_t>(target_block)][static_cast<size_t>(source_block)].size());
  }
  const std::vector<int>& copy_positions(int target_block, int source_block, int copy) const {
    return slots_[static_cast<size_t>(target_block)][static_cast<size_t>(source_block)][static_cast<size_t>(copy)];
  }

  Element apply(const Element& x) const;

  // Entry (j,i) is the rank of block j of the image of a minimal projection
  // of source block i.
  MultiplicityMatrix multiplicity() const;

  friend Wiring compose(const Wiring& outer, const Wiring& inner); // outer ∘ inner

  // Equality of slot assignments (in normal form this is also equality of the
  // induced homomorphisms).
  friend bool operator==(const Wiring& a, const Wiring& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.slots_ == b.slots_;
  }
  friend bool operator!=(const Wiring& a, const Wiring& b) { return !(a == b); }

  std::string str() const;

private:
  void validate() const;
  void normalize();

  MultiMatrixAlgebra source_;
  MultiMatrixAlgebra target_;
  std::vector<std::vector<std::vector<std::vector<int>>>> slots_;
};

// Same source and target and equal multiplicity matrices; the classification
// of homomorphisms up to unitary equivalence.
bool unitarily_equivalent(const Wiring& f, const Wiring& g);

// Runs the generic homomorphism identities on the induced unit images.
// Returns a description of the first violation (always empty for wirings;
// exposed so reports can show the certified check).
std::string check_homomorphism(const Wiring& w);

} // namespace afb
