#pragma once

#include <string>
#include <utility>
#include <vector>

namespace afb {

// Finite partially ordered set over named vertices. Vertices are kept sorted
// by name; the relation is the reflexive-transitive closure of the arcs given
// at construction. Antisymmetry is checked and violations throw.
class FinitePoset {
public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> vertices,
              const std::vector<std::pair<std::string, std::string>>& arcs);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(static_cast<size_t>(v)); }
  int index_of(const std::string& name) const; // -1 if absent

  bool leq(int a, int b) const { return leq_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b)); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  // Covering pairs (a,b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> hasse_edges() const;

  // Vertices v with a <= v and b <= v, ascending.
  std::vector<int> upper_bounds(int a, int b) const;

  bool is_chain() const;
  bool is_directed() const; // every pair has an upper bound

  // Vertices sorted bottom-up: by length of the longest chain below, ties by
  // name. A deterministic linear extension of the order.
  std::vector<int> topological_order() const;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
};

} // namespace afb
