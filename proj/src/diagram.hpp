#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poset.hpp"
#include "wiring.hpp"

namespace afb {

// Parse failure with source position. line and column are 1-based.
class ParseError : public AfbError {
public:
  ParseError(int line, int column, const std::string& what)
      : AfbError(line > 0 ? "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what
                          : what),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Dimension vectors on a finite poset plus a multiplicity matrix for every
// comparable pair. Construction checks shapes; the two diagram conditions
// (dimension bounds and composition identities) are checked by validate(),
// not assumed.
class BrattelDiagram {
public:
  BrattelDiagram() = default;
  BrattelDiagram(FinitePoset poset, std::vector<std::vector<int>> dims,
                 std::map<std::pair<int, int>, MultiplicityMatrix> mults);

  const FinitePoset& poset() const { return poset_; }
  const std::vector<int>& dims(int v) const { return dims_.at(static_cast<size_t>(v)); }
  int num_blocks(int v) const { return static_cast<int>(dims(v).size()); }
  MultiMatrixAlgebra algebra(int v) const { return MultiMatrixAlgebra(dims(v)); }

  // Multiplicity matrix for lower < upper; identity when lower == upper.
  const MultiplicityMatrix& mult(int lower, int upper) const;

  std::string to_text() const; // canonical file form, all comparable pairs explicit

private:
  FinitePoset poset_;
  std::vector<std::vector<int>> dims_;
  std::map<std::pair<int, int>, MultiplicityMatrix> mults_;
  mutable std::map<int, MultiplicityMatrix> identities_; // cache for mult(v, v)
};

// Reads the line-oriented diagram format:
//   vertex <name> : <n_1> ... <n_k>
//   edge <src> -> <dst> : <row_1> ; ... ; <row_k_dst>
// '#' starts a comment. The order is the reflexive-transitive closure of the
// listed edges. Matrices for comparable pairs without an explicit edge are
// derived by composing along explicit-edge paths; all such paths must agree.
BrattelDiagram parse_diagram(const std::string& text);

struct ValidationReport {
  std::vector<std::string> violations;
  int pairs_checked = 0;
  int triples_checked = 0;
  bool ok() const { return violations.empty(); }
};

// Checks N_{mu,lambda} n_lambda <= n_mu on every comparable pair and
// N_{nu,mu} N_{mu,lambda} = N_{nu,lambda} on every chain of three.
ValidationReport validate_diagram(const BrattelDiagram& d);

// Adopted primeness condition for a diagram over a finite poset: for every
// two vertex/block pairs (v1,i), (v2,j) there are a vertex u above both and a
// block k of u with N_{u,v1}[k,i] > 0 and N_{u,v2}[k,j] > 0, where N_{v,v} is
// the identity. When false and counterexample is non-null, a description of
// the first failing pair is stored there.
bool is_prime_diagram(const BrattelDiagram& d, std::string* counterexample = nullptr);

// Poset isomorphism plus per-vertex block permutations carrying dims and all
// multiplicity matrices of d1 to d2.
struct DiagramIsomorphism {
  std::vector<int> vertex_map;              // d1 vertex index -> d2 vertex index
  std::vector<std::vector<int>> block_maps; // per d1 vertex: block -> d2 block
  std::string str(const BrattelDiagram& d1, const BrattelDiagram& d2) const;
};

std::optional<DiagramIsomorphism> diagrams_isomorphic(const BrattelDiagram& d1,
                                                      const BrattelDiagram& d2);

} // namespace afb
