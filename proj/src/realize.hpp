#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace afb {

// Algebras on a finite poset with a concrete wiring for every comparable
// pair, composing exactly along chains.
class InductiveSystem {
public:
  InductiveSystem(FinitePoset poset, std::vector<MultiMatrixAlgebra> algebras,
                  std::map<std::pair<int, int>, Wiring> maps);

  const FinitePoset& poset() const { return poset_; }
  const MultiMatrixAlgebra& algebra(int v) const { return algebras_.at(static_cast<size_t>(v)); }
  const Wiring& map(int lower, int upper) const;

  // Re-checks w(b,c) ∘ w(a,b) == w(a,c) for every chain a < b < c.
  // Returns a description of the first failure, or empty string.
  std::string check_functoriality() const;

  BrattelDiagram to_diagram() const;

private:
  FinitePoset poset_;
  std::vector<MultiMatrixAlgebra> algebras_;
  std::map<std::pair<int, int>, Wiring> maps_;
};

// Standard wirings along consecutive pairs of a totally ordered diagram,
// with composite maps defined by composition. Requires a valid chain diagram.
InductiveSystem realize_chain(const BrattelDiagram& d);

enum class RealizeStatus {
  Witness,         // inductive system found
  NoRealization,   // search space fully enumerated, no witness in the wiring class
  BudgetExhausted, // node limit hit before full enumeration
};

struct RealizeResult {
  RealizeStatus status = RealizeStatus::NoRealization;
  std::optional<InductiveSystem> witness;
  long long nodes = 0;                            // assignment attempts
  std::vector<std::pair<int, int>> forest_edges;  // gauge-fixed to standard wirings
  std::vector<std::pair<int, int>> search_edges;  // free edges in processing order
};

// Backtracking search for an inductive system of wirings whose Bratteli
// diagram is exactly d.
//
// Gauge fixing: scanning Hasse edges bottom-up, an edge is forced to the
// standard wiring whenever its target vertex is not yet an endpoint of a
// forced edge. Any realization by wirings can be conjugated by per-vertex
// coordinate permutations into one that is standard on those edges, so this
// loses no witnesses. Remaining edges are enumerated slot by slot in
// lexicographic order with positions ascending, pruning against the
// requirement that compositions along any two Hasse paths with the same
// endpoints agree. The first witness found is therefore the least one in
// that enumeration order, and the verdicts are deterministic.
RealizeResult search_realization(const BrattelDiagram& d, long long max_nodes = 10'000'000);

} // namespace afb
