#pragma once

#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace afb {

// Decomposition of a *-closed subalgebra (given by a spanning set inside an
// ambient multi-matrix algebra) into its simple summands.
struct SubalgebraDecomposition {
  SpanBasis basis;                 // echelon basis of the span
  Element unit;                    // unit of the subalgebra
  std::vector<Element> idempotents; // minimal central idempotents, canonical order
  std::vector<int> summand_sizes;  // matrix size of each summand
};

// Verifies that the span is closed under multiplication and adjoints, finds
// its unit, computes the center and splits it into minimal idempotents.
// Throws if the span is not closed, or if splitting would require eigenvalues
// outside the Gaussian rationals (cannot happen for the 0/±1 structured
// spans this library builds).
SubalgebraDecomposition decompose_span(const std::vector<Element>& spanning);

// Convenience wrapper matching the operation name used in reports.
std::vector<Element> minimal_central_idempotents(const std::vector<Element>& spanning);

// A map defined on the matrix units of an abstract source algebra with values
// in (a possibly different) target algebra. Used for concrete
// *-homomorphisms: quotient sections, stage isomorphisms and the like.
class GeneratorMap {
public:
  GeneratorMap(MultiMatrixAlgebra source, MultiMatrixAlgebra target);

  void set_image(const UnitIndex& unit, Element value);
  const Element& image(const UnitIndex& unit) const;

  const MultiMatrixAlgebra& source() const { return source_; }
  const MultiMatrixAlgebra& target() const { return target_; }

  // Linear extension of the unit images.
  Element apply(const Element& x) const;

  // Checks the *-homomorphism identities on all matrix units:
  //   phi(e_{r,s}) phi(e_{s',t}) = [s == s'] phi(e_{r,t})   (same block)
  //   phi(e) phi(f) = 0                                      (different blocks)
  //   phi(e_{r,s})^* = phi(e_{s,r})
  // Returns a description of the first violated identity, or empty string.
  std::string check_homomorphism() const;
  bool is_homomorphism() const { return check_homomorphism().empty(); }

  // Rank of the image span. Equal to source dimension iff injective.
  int image_rank() const;

private:
  MultiMatrixAlgebra source_;
  MultiMatrixAlgebra target_;
  std::map<UnitIndex, Element> images_;
};

} // namespace afb
