#pragma once

#include <string>
#include <vector>

#include "center.hpp"
#include "diagram.hpp"

namespace afb {

// Ground data for the twin construction: a finite set of named points plus
// one reserved tail point, and one 2x2 matrix block per unordered pair of
// points (tail included). Stages are indexed by subsets of the real points;
// the reserved point only supplies the room that keeps every stage's line
// projections nonzero.
class TwinGround {
public:
  explicit TwinGround(int num_points);

  int num_points() const { return num_points_; }          // real points
  int num_all_points() const { return num_points_ + 1; }  // including the tail point
  std::string point_name(int p) const;

  int num_pairs() const;
  std::pair<int, int> pair_points(int block) const; // (u,v) with u < v
  int pair_block(int u, int v) const;

  const MultiMatrixAlgebra& ambient() const { return ambient_; }

private:
  int num_points_;
  std::vector<std::pair<int, int>> pairs_; // lex over point indices
  MultiMatrixAlgebra ambient_;
};

enum class TwinVariant { A, B };

// Variant A: the rank-one unit at the fixed first coordinate of every block
// containing the point. Variant B: the diagonal unit at the point's own
// coordinate within each block.
Element twin_generator(const TwinGround& ground, TwinVariant variant, int point);

// One stage: the span of the blocks inside lambda together with the
// generators of the points of lambda, plus its verified multi-matrix
// structure. Abstract block order: pair blocks (lex), then one line per point.
struct TwinStage {
  TwinVariant variant = TwinVariant::A;
  std::vector<int> points;                   // sorted subset of real points
  std::vector<std::pair<int, int>> pair_blocks;
  MultiMatrixAlgebra ambient;
  MultiMatrixAlgebra algebra;                // sizes: 2 per pair block, 1 per line
  std::vector<Element> unit_images;          // ambient image of each abstract matrix unit
  std::vector<UnitIndex> unit_order;         // abstract unit per entry of unit_images
};

// Builds the stage and certifies it: the span closes, its minimal central
// idempotents give one 2x2 summand per inner pair and one line per point, and
// the abstract-unit realization is a *-isomorphism onto the span.
TwinStage build_twin_stage(const TwinGround& ground, TwinVariant variant,
                           const std::vector<int>& lambda);

// Abstract coordinates of an ambient element lying in the stage span.
Element twin_to_abstract(const TwinStage& stage, const Element& x);
Element twin_from_abstract(const TwinStage& stage, const Element& abstract_x);

// The set-theoretic inclusion of stages expressed in the two canonical block
// bases. Checked against the concrete inclusion on every abstract unit.
Wiring twin_inclusion(const TwinStage& sub, const TwinStage& super);

struct TwinQuotient {
  std::vector<int> ideal_blocks;        // blocks of the stage algebra in the commutator ideal
  MultiMatrixAlgebra quotient;          // one line per point of the stage
  std::vector<Element> generator_images; // image of each point generator in the quotient
};

// Ideal generated by all commutators of the stage, and the induced quotient
// data: the point generators project to the indicator lines.
TwinQuotient quotient_by_commutators(const TwinGround& ground, const TwinStage& stage);

// Projection of a stage element onto the quotient by the commutator ideal.
Element twin_quotient_map(const TwinStage& stage, const TwinQuotient& q, const Element& x);

// Section of the quotient for variant B: the indicator of each point is sent
// to its diagonal generator. Fails on variant A, whose generators are not
// mutually orthogonal.
GeneratorMap splitting_section(const TwinGround& ground, const TwinStage& stage);

// The listed-ground isomorphism between the two generator families, defined
// on all matrix units of the ambient algebra and on the point generators.
struct TwinIso {
  GeneratorMap on_units;              // ambient units -> ambient elements
  std::vector<Element> p_images;      // image of generator p for each real point
};

TwinIso countable_iso(const TwinGround& ground);

// Diagram over the nonempty subsets of the real points, with multiplicities
// from the stage inclusions.
BrattelDiagram twin_diagram(const TwinGround& ground, TwinVariant variant);

std::string twin_subset_name(const TwinGround& ground, const std::vector<int>& points);

} // namespace afb
