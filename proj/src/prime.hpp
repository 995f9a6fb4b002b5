#pragma once

#include <string>
#include <vector>

#include "center.hpp"
#include "diagram.hpp"

namespace afb {

// A label of a finite point set: the set listed in some order, i.e. a
// bijection from {1..n} onto the set.
using Label = std::vector<int>;

// Ground data for the label construction: a finite point set, its subsets in
// (size, lexicographic) order, and one matrix block of size |subset|! per
// subset, with coordinates indexed by the subset's labels in lexicographic
// order.
class PrimeGround {
public:
  explicit PrimeGround(int num_points);

  int num_points() const { return num_points_; }
  std::string point_name(int p) const;
  unsigned full_mask() const { return (1u << num_points_) - 1; }

  int num_subsets() const { return static_cast<int>(subsets_.size()); }
  unsigned subset_mask(int index) const { return subsets_.at(static_cast<size_t>(index)); }
  int subset_index(unsigned mask) const;
  std::string subset_name(unsigned mask) const; // "O" for the empty set
  static std::vector<int> subset_points(unsigned mask);

  const std::vector<Label>& labels(unsigned mask) const; // lexicographic, |mask|! entries
  int label_index(unsigned mask, const Label& t) const;

  const MultiMatrixAlgebra& ambient() const { return ambient_; }
  MultiMatrixAlgebra block_algebra(unsigned mask) const; // single block of size |mask|!

private:
  int num_points_;
  std::vector<unsigned> subsets_;
  std::vector<int> index_of_mask_;
  std::vector<std::vector<Label>> labels_; // aligned with subsets_
  MultiMatrixAlgebra ambient_;
};

Label concat_labels(const Label& t, const Label& s); // disjoint domains; t then s

// The block embedding M_lambda -> M_mu sending e_{s,t} to the sum of
// e_{su,tu} over labels u of mu \ lambda. Multiplicity |mu\lambda|!.
Wiring iota_hom(const PrimeGround& ground, unsigned lambda, unsigned mu);

// The ambient element with coordinate nu equal to the iota image of e_{s,t}
// for every nu containing lambda, and zero elsewhere.
Element f_unit(const PrimeGround& ground, unsigned lambda, const Label& s, const Label& t);

// One stage: the span of all f-units for subsets of mu. Its simple summands
// are indexed by those subsets with matrix size |subset|!; the isomorphism
// onto the abstract form is coordinate evaluation at the subsets of mu.
struct PrimeStage {
  unsigned mu = 0;
  std::vector<unsigned> block_subsets;  // (size, lex) order
  MultiMatrixAlgebra algebra;
  std::vector<UnitIndex> unit_order;    // abstract unit per basis element
  std::vector<Element> f_units;         // ambient f-unit per basis element
};

// Builds the stage. With full_verify, also certifies multiplicative closure
// of the span (every pairwise product expands back over the f-basis) and
// that the corrected units realize the abstract matrix relations.
PrimeStage stage_algebra(const PrimeGround& ground, unsigned mu, bool full_verify);

// The stage matrix unit for summand lambda: the f-unit minus its leakage into
// the one-point-bigger summands inside mu.
Element stage_unit_element(const PrimeGround& ground, unsigned mu, unsigned lambda,
                           const Label& s, const Label& t);

// Abstract coordinates (evaluation at the subsets of mu) of a span element;
// rejects elements outside the span.
Element prime_to_abstract(const PrimeGround& ground, const PrimeStage& stage, const Element& x);

// The stage inclusion expressed in the two evaluation bases. With verify, it
// is checked against the concrete inclusion on every abstract unit.
Wiring prime_inclusion(const PrimeGround& ground, const PrimeStage& sub,
                       const PrimeStage& super, bool verify);

struct SummandLocation {
  unsigned lambda0;        // inclusion-minimal nonzero component of the input
  int fresh_point;         // point outside mu used to grow it
  unsigned lambda0_grown;  // lambda0 plus the fresh point
  std::vector<unsigned> ideal_support; // stage blocks of the ideal generated in the grown stage
};

// Follows the ideal argument: decompose a nonzero stage element into summand
// components, pick the minimal nonzero one, grow it by a fresh point and
// certify that the ideal generated by the element contains the whole grown
// summand. Requires a fresh point; the top stage of a finite ground has none.
SummandLocation locate_summand_ideal(const PrimeGround& ground, unsigned mu, const Element& a);

// True iff the ideal generated by summand lambda0 inside the stage over mu
// contains summand lambda. Computed from the actual ideal support.
bool hereditary_check(const PrimeGround& ground, unsigned mu, unsigned lambda0, unsigned lambda);

// Diagram over all subsets of the ground (empty set included), with
// multiplicities from the stage inclusions.
BrattelDiagram prime_stage_diagram(const PrimeGround& ground, bool full_verify);

} // namespace afb
