#include "poset.hpp"

#include <algorithm>

#include "errors.hpp"

namespace afb {

FinitePoset::FinitePoset(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& arcs)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw AfbError("duplicate vertex name");
  size_t n = names_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [src, dst] : arcs) {
    int a = index_of(src);
    int b = index_of(dst);
    if (a < 0) throw AfbError("unknown vertex '" + src + "' in order relation");
    if (b < 0) throw AfbError("unknown vertex '" + dst + "' in order relation");
    leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  }
  // Reflexive-transitive closure.
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (leq_[k][j]) leq_[i][j] = true;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw AfbError("order relation has a cycle through '" + names_[i] + "' and '" +
                       names_[j] + "'");
}

int FinitePoset::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

std::vector<std::pair<int, int>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<int, int>> edges;
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n; ++c) {
        if (c != a && c != b && less(a, c) && less(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) edges.push_back({a, b});
    }
  return edges;
}

std::vector<int> FinitePoset::upper_bounds(int a, int b) const {
  std::vector<int> ub;
  for (int v = 0; v < size(); ++v)
    if (leq(a, v) && leq(b, v)) ub.push_back(v);
  return ub;
}

bool FinitePoset::is_chain() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!comparable(a, b)) return false;
  return true;
}

bool FinitePoset::is_directed() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (upper_bounds(a, b).empty()) return false;
  return true;
}

std::vector<int> FinitePoset::topological_order() const {
  int n = size();
  // height = longest chain strictly below; computed by fixpoint since the
  // relation is already transitively closed.
  std::vector<int> height(static_cast<size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (less(a, b) && height[static_cast<size_t>(b)] < height[static_cast<size_t>(a)] + 1) {
          height[static_cast<size_t>(b)] = height[static_cast<size_t>(a)] + 1;
          changed = true;
        }
  }
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (height[static_cast<size_t>(a)] != height[static_cast<size_t>(b)])
      return height[static_cast<size_t>(a)] < height[static_cast<size_t>(b)];
    return name(a) < name(b);
  });
  return order;
}

} // namespace afb
