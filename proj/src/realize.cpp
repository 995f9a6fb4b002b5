#include "realize.hpp"

#include <algorithm>
#include <sstream>

namespace afb {

InductiveSystem::InductiveSystem(FinitePoset poset, std::vector<MultiMatrixAlgebra> algebras,
                                 std::map<std::pair<int, int>, Wiring> maps)
    : poset_(std::move(poset)), algebras_(std::move(algebras)), maps_(std::move(maps)) {
  if (static_cast<int>(algebras_.size()) != poset_.size())
    throw AfbError("inductive system needs one algebra per vertex");
  for (int a = 0; a < poset_.size(); ++a)
    for (int b = 0; b < poset_.size(); ++b) {
      if (!poset_.less(a, b)) continue;
      auto it = maps_.find({a, b});
      if (it == maps_.end())
        throw AfbError("missing wiring for pair " + poset_.name(a) + " < " + poset_.name(b));
      if (it->second.source() != algebras_[static_cast<size_t>(a)] ||
          it->second.target() != algebras_[static_cast<size_t>(b)])
        throw AfbError("wiring endpoints mismatch for pair " + poset_.name(a) + " < " +
                       poset_.name(b));
    }
}

const Wiring& InductiveSystem::map(int lower, int upper) const {
  auto it = maps_.find({lower, upper});
  if (it == maps_.end())
    throw AfbError("no wiring for pair " + poset_.name(lower) + " < " + poset_.name(upper));
  return it->second;
}

std::string InductiveSystem::check_functoriality() const {
  for (int a = 0; a < poset_.size(); ++a)
    for (int b = 0; b < poset_.size(); ++b) {
      if (!poset_.less(a, b)) continue;
      for (int c = 0; c < poset_.size(); ++c) {
        if (!poset_.less(b, c)) continue;
        if (!(compose(map(b, c), map(a, b)) == map(a, c)))
          return "composition along " + poset_.name(a) + " < " + poset_.name(b) + " < " +
                 poset_.name(c) + " differs from the direct wiring";
      }
    }
  return "";
}

BrattelDiagram InductiveSystem::to_diagram() const {
  std::vector<std::vector<int>> dims;
  dims.reserve(static_cast<size_t>(poset_.size()));
  for (int v = 0; v < poset_.size(); ++v) dims.push_back(algebras_[static_cast<size_t>(v)].sizes());
  std::map<std::pair<int, int>, MultiplicityMatrix> mults;
  for (const auto& [pair, w] : maps_) mults.emplace(pair, w.multiplicity());
  return BrattelDiagram(poset_, std::move(dims), std::move(mults));
}

InductiveSystem realize_chain(const BrattelDiagram& d) {
  if (!d.poset().is_chain()) throw AfbError("realize_chain requires a totally ordered poset");
  ValidationReport report = validate_diagram(d);
  if (!report.ok())
    throw AfbError("diagram is not valid: " + report.violations.front());
  std::vector<int> order = d.poset().topological_order();
  std::vector<MultiMatrixAlgebra> algebras;
  algebras.reserve(static_cast<size_t>(d.poset().size()));
  for (int v = 0; v < d.poset().size(); ++v) algebras.push_back(d.algebra(v));

  std::map<std::pair<int, int>, Wiring> maps;
  // Standard wirings on consecutive pairs; composites by folding upward.
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    int a = order[i];
    int b = order[i + 1];
    maps.emplace(std::make_pair(a, b),
                 Wiring::standard(algebras[static_cast<size_t>(a)],
                                  algebras[static_cast<size_t>(b)], d.mult(a, b)));
  }
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    for (size_t j = i + 2; j < order.size(); ++j) {
      int a = order[i];
      int b = order[j - 1];
      int c = order[j];
      maps.emplace(std::make_pair(a, c), compose(maps.at({b, c}), maps.at({a, b})));
    }
  }
  return InductiveSystem(d.poset(), std::move(algebras), std::move(maps));
}

namespace {

// One Hasse edge with its (possibly partial) slot assignment. Copy counts are
// fixed by the diagram's multiplicity matrix; only positions vary.
struct EdgeVar {
  int src = 0;
  int dst = 0;
  bool forced = false;
  // pos[j][i][c][r] = assigned coordinate in target block j, or -1.
  std::vector<std::vector<std::vector<std::vector<int>>>> pos;
  std::vector<std::vector<bool>> used; // per target block
};

struct Slot {
  int j, i, c, r;
};

// A pair of Hasse paths with the same endpoints whose composites must agree.
struct Constraint {
  std::vector<int> path_a; // edge indices, bottom to top
  std::vector<int> path_b;
  int source_vertex;
};

// Chain tuple: final target block and per-source-coordinate positions,
// -1 where not yet assigned.
struct ChainTuple {
  int block;
  std::vector<int> coords;

  bool complete() const {
    return std::none_of(coords.begin(), coords.end(), [](int c) { return c < 0; });
  }
  bool operator<(const ChainTuple& o) const {
    if (block != o.block) return block < o.block;
    return coords < o.coords;
  }
  bool operator==(const ChainTuple& o) const { return block == o.block && coords == o.coords; }
};

bool compatible(const ChainTuple& a, const ChainTuple& b) {
  if (a.block != b.block) return false;
  for (size_t r = 0; r < a.coords.size(); ++r)
    if (a.coords[r] >= 0 && b.coords[r] >= 0 && a.coords[r] != b.coords[r]) return false;
  return true;
}

class Search {
public:
  Search(const BrattelDiagram& d, long long max_nodes) : d_(d), max_nodes_(max_nodes) {
    for (int v = 0; v < d.poset().size(); ++v) algebras_.push_back(d.algebra(v));
    build_edges();
    build_constraints();
    order_free_edges();
  }

  RealizeResult run() {
    RealizeResult result;
    for (const EdgeVar& e : edges_)
      if (e.forced) result.forest_edges.push_back({e.src, e.dst});
    for (int idx : free_order_) result.search_edges.push_back({edges_[static_cast<size_t>(idx)].src, edges_[static_cast<size_t>(idx)].dst});

    bool found = false;
    bool exhausted_budget = false;
    try {
      found = fill_edge(0);
    } catch (const BudgetHit&) {
      exhausted_budget = true;
    }
    result.nodes = nodes_;
    if (found) {
      result.status = RealizeStatus::Witness;
      result.witness = build_witness();
    } else if (exhausted_budget) {
      result.status = RealizeStatus::BudgetExhausted;
    } else {
      result.status = RealizeStatus::NoRealization;
    }
    return result;
  }

private:
  struct BudgetHit {};

  void build_edges() {
    auto hasse = d_.poset().hasse_edges();
    // Bottom-up deterministic scan order: by topological rank of the source,
    // then of the target.
    std::vector<int> order = d_.poset().topological_order();
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::sort(hasse.begin(), hasse.end(), [&](const auto& x, const auto& y) {
      if (rank[static_cast<size_t>(x.first)] != rank[static_cast<size_t>(y.first)])
        return rank[static_cast<size_t>(x.first)] < rank[static_cast<size_t>(y.first)];
      return rank[static_cast<size_t>(x.second)] < rank[static_cast<size_t>(y.second)];
    });

    std::vector<bool> endpoint(static_cast<size_t>(d_.poset().size()), false);
    for (const auto& [a, b] : hasse) {
      EdgeVar e;
      e.src = a;
      e.dst = b;
      const MultiplicityMatrix& n = d_.mult(a, b);
      const MultiMatrixAlgebra& src = algebras_[static_cast<size_t>(a)];
      const MultiMatrixAlgebra& dst = algebras_[static_cast<size_t>(b)];
      // Gauge fixing: standard wiring wherever the target vertex is fresh.
      if (!endpoint[static_cast<size_t>(b)]) {
        e.forced = true;
        Wiring std_wiring = Wiring::standard(src, dst, n);
        e.pos.assign(static_cast<size_t>(dst.num_blocks()), {});
        for (int j = 0; j < dst.num_blocks(); ++j) {
          e.pos[static_cast<size_t>(j)].resize(static_cast<size_t>(src.num_blocks()));
          for (int i = 0; i < src.num_blocks(); ++i)
            for (int c = 0; c < std_wiring.copies(j, i); ++c)
              e.pos[static_cast<size_t>(j)][static_cast<size_t>(i)].push_back(
                  std_wiring.copy_positions(j, i, c));
        }
        endpoint[static_cast<size_t>(a)] = true;
        endpoint[static_cast<size_t>(b)] = true;
      } else {
        e.forced = false;
        e.pos.assign(static_cast<size_t>(dst.num_blocks()), {});
        e.used.assign(static_cast<size_t>(dst.num_blocks()), {});
        for (int j = 0; j < dst.num_blocks(); ++j) {
          e.pos[static_cast<size_t>(j)].resize(static_cast<size_t>(src.num_blocks()));
          e.used[static_cast<size_t>(j)].assign(static_cast<size_t>(dst.block_size(j)), false);
          for (int i = 0; i < src.num_blocks(); ++i)
            e.pos[static_cast<size_t>(j)][static_cast<size_t>(i)].assign(
                static_cast<size_t>(n.at(j, i)),
                std::vector<int>(static_cast<size_t>(src.block_size(i)), -1));
        }
      }
      edges_.push_back(std::move(e));
    }
  }

  void build_constraints() {
    // All Hasse paths between every comparable pair; two or more paths yield
    // constraints pairing each path with the first.
    const FinitePoset& p = d_.poset();
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        if (!p.less(a, b)) continue;
        std::vector<std::vector<int>> paths;
        std::vector<int> current;
        enumerate_paths(a, b, current, paths);
        for (size_t k = 1; k < paths.size(); ++k)
          constraints_.push_back({paths[0], paths[k], a});
      }
  }

  void enumerate_paths(int v, int goal, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) const {
    if (v == goal) {
      out.push_back(current);
      return;
    }
    for (size_t idx = 0; idx < edges_.size(); ++idx) {
      const EdgeVar& e = edges_[idx];
      if (e.src != v || !d_.poset().leq(e.dst, goal)) continue;
      current.push_back(static_cast<int>(idx));
      enumerate_paths(e.dst, goal, current, out);
      current.pop_back();
    }
  }

  // Estimated assignment count for a free edge, used only to order edges.
  double space_estimate(const EdgeVar& e) const {
    double total = 1.0;
    const MultiMatrixAlgebra& dst = algebras_[static_cast<size_t>(e.dst)];
    for (int j = 0; j < dst.num_blocks(); ++j) {
      int positions = dst.block_size(j);
      int slots = 0;
      for (const auto& copies : e.pos[static_cast<size_t>(j)])
        for (const auto& copy : copies) slots += static_cast<int>(copy.size());
      for (int s = 0; s < slots; ++s) total *= static_cast<double>(positions - s);
    }
    return total;
  }

  void order_free_edges() {
    std::vector<int> remaining;
    for (size_t i = 0; i < edges_.size(); ++i)
      if (!edges_[i].forced) remaining.push_back(static_cast<int>(i));
    std::vector<bool> placed(edges_.size(), false);
    for (size_t i = 0; i < edges_.size(); ++i) placed[i] = edges_[i].forced;

    while (!remaining.empty()) {
      // Prefer an edge that completes a constraint (all other edges placed);
      // otherwise the smallest enumeration space. Ties by vertex names.
      auto name_key = [&](int idx) {
        return std::make_pair(d_.poset().name(edges_[static_cast<size_t>(idx)].src),
                              d_.poset().name(edges_[static_cast<size_t>(idx)].dst));
      };
      int best = -1;
      bool best_completes = false;
      double best_space = 0;
      for (int idx : remaining) {
        bool completes = false;
        for (const Constraint& c : constraints_) {
          bool involves = false;
          bool others_placed = true;
          for (const std::vector<int>* path : {&c.path_a, &c.path_b})
            for (int e : *path) {
              if (e == idx)
                involves = true;
              else if (!placed[static_cast<size_t>(e)])
                others_placed = false;
            }
          if (involves && others_placed) {
            completes = true;
            break;
          }
        }
        double space = space_estimate(edges_[static_cast<size_t>(idx)]);
        bool better;
        if (best < 0) {
          better = true;
        } else if (completes != best_completes) {
          better = completes;
        } else if (space != best_space) {
          better = space < best_space;
        } else {
          better = name_key(idx) < name_key(best);
        }
        if (better) {
          best = idx;
          best_completes = completes;
          best_space = space;
        }
      }
      free_order_.push_back(best);
      placed[static_cast<size_t>(best)] = true;
      remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }

    // Constraints are checked while filling the last of their free edges in
    // the processing order.
    checks_at_.assign(free_order_.size(), {});
    for (size_t ci = 0; ci < constraints_.size(); ++ci) {
      const Constraint& c = constraints_[ci];
      int last = -1;
      for (const std::vector<int>* path : {&c.path_a, &c.path_b})
        for (int e : *path) {
          if (edges_[static_cast<size_t>(e)].forced) continue;
          int pos = static_cast<int>(
              std::find(free_order_.begin(), free_order_.end(), e) - free_order_.begin());
          last = std::max(last, pos);
        }
      if (last >= 0) checks_at_[static_cast<size_t>(last)].push_back(static_cast<int>(ci));
    }
  }

  // Chain tuples of a path composite for one source block, honoring partial
  // assignments.
  void chains(const std::vector<int>& path, size_t step, int block,
              std::vector<int>& coords, std::vector<ChainTuple>& out) const {
    if (step == path.size()) {
      out.push_back({block, coords});
      return;
    }
    const EdgeVar& e = edges_[static_cast<size_t>(path[step])];
    const MultiMatrixAlgebra& dst = algebras_[static_cast<size_t>(e.dst)];
    for (int j = 0; j < dst.num_blocks(); ++j) {
      const auto& copies = e.pos[static_cast<size_t>(j)][static_cast<size_t>(block)];
      for (const auto& copy : copies) {
        std::vector<int> next(coords.size());
        for (size_t r = 0; r < coords.size(); ++r)
          next[r] = coords[r] < 0 ? -1 : copy[static_cast<size_t>(coords[r])];
        chains(path, step + 1, j, next, out);
      }
    }
  }

  // False on definite violation. With `exact`, both sides must be fully
  // assigned and are compared as multisets; otherwise the check prunes via
  // per-chain compatibility only.
  bool check_constraint(const Constraint& c, bool exact) const {
    const MultiMatrixAlgebra& src = algebras_[static_cast<size_t>(c.source_vertex)];
    for (int i = 0; i < src.num_blocks(); ++i) {
      std::vector<ChainTuple> ta, tb;
      std::vector<int> coords(static_cast<size_t>(src.block_size(i)));
      for (size_t r = 0; r < coords.size(); ++r) coords[r] = static_cast<int>(r);
      chains(c.path_a, 0, i, coords, ta);
      for (size_t r = 0; r < coords.size(); ++r) coords[r] = static_cast<int>(r);
      chains(c.path_b, 0, i, coords, tb);
      if (exact) {
        std::sort(ta.begin(), ta.end());
        std::sort(tb.begin(), tb.end());
        if (!(ta == tb)) return false;
      } else {
        for (const ChainTuple& t : ta) {
          if (std::none_of(tb.begin(), tb.end(),
                           [&](const ChainTuple& o) { return compatible(t, o); }))
            return false;
        }
        for (const ChainTuple& t : tb) {
          if (std::none_of(ta.begin(), ta.end(),
                           [&](const ChainTuple& o) { return compatible(t, o); }))
            return false;
        }
      }
    }
    return true;
  }

  std::vector<Slot> slot_list(const EdgeVar& e) const {
    std::vector<Slot> slots;
    const MultiMatrixAlgebra& dst = algebras_[static_cast<size_t>(e.dst)];
    const MultiMatrixAlgebra& src = algebras_[static_cast<size_t>(e.src)];
    for (int j = 0; j < dst.num_blocks(); ++j)
      for (int i = 0; i < src.num_blocks(); ++i)
        for (size_t c = 0; c < e.pos[static_cast<size_t>(j)][static_cast<size_t>(i)].size(); ++c)
          for (int r = 0; r < src.block_size(i); ++r)
            slots.push_back({j, i, static_cast<int>(c), r});
    return slots;
  }

  bool fill_edge(size_t order_pos) {
    if (order_pos == free_order_.size()) return true;
    EdgeVar& e = edges_[static_cast<size_t>(free_order_[order_pos])];
    std::vector<Slot> slots = slot_list(e);
    return fill_slot(order_pos, e, slots, 0);
  }

  bool fill_slot(size_t order_pos, EdgeVar& e, const std::vector<Slot>& slots, size_t s) {
    if (s == slots.size()) {
      for (int ci : checks_at_[order_pos])
        if (!check_constraint(constraints_[static_cast<size_t>(ci)], /*exact=*/true))
          return false;
      return fill_edge(order_pos + 1);
    }
    const Slot& slot = slots[s];
    auto& copy = e.pos[static_cast<size_t>(slot.j)][static_cast<size_t>(slot.i)]
                      [static_cast<size_t>(slot.c)];
    auto& used = e.used[static_cast<size_t>(slot.j)];
    int n = algebras_[static_cast<size_t>(e.dst)].block_size(slot.j);
    // Canonical copy order: first coordinates of equal (block, source) copies
    // are increasing, so permuting copies never enumerates twice.
    int min_pos = 0;
    if (slot.r == 0 && slot.c > 0) {
      min_pos = e.pos[static_cast<size_t>(slot.j)][static_cast<size_t>(slot.i)]
                     [static_cast<size_t>(slot.c - 1)][0] +
                1;
    }
    for (int p = min_pos; p < n; ++p) {
      if (used[static_cast<size_t>(p)]) continue;
      if (++nodes_ > max_nodes_) throw BudgetHit{};
      copy[static_cast<size_t>(slot.r)] = p;
      used[static_cast<size_t>(p)] = true;
      bool ok = true;
      for (int ci : checks_at_[order_pos]) {
        if (!check_constraint(constraints_[static_cast<size_t>(ci)], /*exact=*/false)) {
          ok = false;
          break;
        }
      }
      if (ok && fill_slot(order_pos, e, slots, s + 1)) return true;
      copy[static_cast<size_t>(slot.r)] = -1;
      used[static_cast<size_t>(p)] = false;
    }
    return false;
  }

  Wiring edge_wiring(const EdgeVar& e) const {
    return Wiring(algebras_[static_cast<size_t>(e.src)], algebras_[static_cast<size_t>(e.dst)],
                  e.pos);
  }

  InductiveSystem build_witness() const {
    std::map<std::pair<int, int>, Wiring> maps;
    for (const EdgeVar& e : edges_) maps.emplace(std::make_pair(e.src, e.dst), edge_wiring(e));
    // Composites along the first Hasse path; the constraints made all paths
    // agree.
    const FinitePoset& p = d_.poset();
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        if (!p.less(a, b) || maps.count({a, b})) continue;
        std::vector<std::vector<int>> paths;
        std::vector<int> current;
        enumerate_paths(a, b, current, paths);
        if (paths.empty()) throw AfbError("comparable pair without a Hasse path");
        const std::vector<int>& path = paths.front();
        Wiring w = edge_wiring(edges_[static_cast<size_t>(path[0])]);
        for (size_t t = 1; t < path.size(); ++t)
          w = compose(edge_wiring(edges_[static_cast<size_t>(path[t])]), w);
        maps.emplace(std::make_pair(a, b), std::move(w));
      }
    return InductiveSystem(p, algebras_, std::move(maps));
  }

  const BrattelDiagram& d_;
  long long max_nodes_;
  long long nodes_ = 0;
  std::vector<MultiMatrixAlgebra> algebras_;
  std::vector<EdgeVar> edges_;
  std::vector<Constraint> constraints_;
  std::vector<int> free_order_;
  std::vector<std::vector<int>> checks_at_;
};

} // namespace

RealizeResult search_realization(const BrattelDiagram& d, long long max_nodes) {
  ValidationReport report = validate_diagram(d);
  if (!report.ok())
    throw AfbError("diagram is not valid: " + report.violations.front());
  Search search(d, max_nodes);
  return search.run();
}

} // namespace afb
