#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace afb {

// Ordered K-theory data of one finite-dimensional stage: a free abelian group
// of the given rank with the componentwise order, scaled by the dimension
// vector (the order interval [0, n] is the image of the projections).
struct K0Stage {
  int rank = 0;
  std::vector<std::int64_t> dims;
};

K0Stage stage_k0(const MultiMatrixAlgebra& algebra);

// The induced map on K0 is the multiplicity matrix of the wiring.
MultiplicityMatrix connect(const Wiring& w);

// Block ranks of a projection: its class in the stage group.
std::vector<std::int64_t> class_of_projection(const Element& p);

// An element of the colimit group presented at one stage of a diagram.
struct ColimitClass {
  int vertex = 0;
  std::vector<std::int64_t> v;
};

// True iff the two presentations agree at some common upper bound.
bool colimit_equal(const BrattelDiagram& d, const ColimitClass& c1, const ColimitClass& c2);

// Positivity: some representative is componentwise nonnegative. Scale
// membership: some representative lies in the order interval [0, dims].
struct PositivityVerdict {
  bool positive = false;
  bool in_scale = false;
};

PositivityVerdict positive_and_scale(const BrattelDiagram& d, const ColimitClass& c);

} // namespace afb
