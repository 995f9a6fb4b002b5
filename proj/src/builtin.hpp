#pragma once

#include "diagram.hpp"

namespace afb {

// Named diagrams:
//   "example-nonrealizable"      five vertices over a >-shaped order; valid,
//                                but admits no inductive system of wirings
//   "finite-subsets"             subsets of a size-point set, one matrix block
//                                of size |subset| per vertex, unit
//                                multiplicities; size >= 1. With
//                                include_empty, the empty set appears as a
//                                zero-block vertex.
//   "twin-a", "twin-b"           stage diagrams of the two twin generator
//                                families, size >= 2 (they are equal entry
//                                for entry)
//   "prime"                      stage diagram of the label construction,
//                                1 <= size <= 4
// size is ignored by example-nonrealizable.
BrattelDiagram builtin_diagram(const std::string& name, int size, bool include_empty = false);

} // namespace afb
