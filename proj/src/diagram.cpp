#include "diagram.hpp"

#include <algorithm>
#include <sstream>

namespace afb {

BrattelDiagram::BrattelDiagram(FinitePoset poset, std::vector<std::vector<int>> dims,
                               std::map<std::pair<int, int>, MultiplicityMatrix> mults)
    : poset_(std::move(poset)), dims_(std::move(dims)), mults_(std::move(mults)) {
  if (static_cast<int>(dims_.size()) != poset_.size())
    throw AfbError("diagram needs one dimension vector per vertex");
  for (const auto& d : dims_)
    for (int n : d)
      if (n < 1) throw AfbError("dimension vector entries must be positive");
  for (int a = 0; a < poset_.size(); ++a)
    for (int b = 0; b < poset_.size(); ++b) {
      if (!poset_.less(a, b)) continue;
      auto it = mults_.find({a, b});
      if (it == mults_.end())
        throw AfbError("missing multiplicity matrix for pair " + poset_.name(a) + " < " +
                       poset_.name(b));
      if (it->second.rows() != num_blocks(b) || it->second.cols() != num_blocks(a))
        throw AfbError("multiplicity matrix shape mismatch for pair " + poset_.name(a) +
                       " < " + poset_.name(b));
    }
}

const MultiplicityMatrix& BrattelDiagram::mult(int lower, int upper) const {
  if (lower == upper) {
    auto it = identities_.find(lower);
    if (it == identities_.end())
      it = identities_.emplace(lower, MultiplicityMatrix::identity(num_blocks(lower))).first;
    return it->second;
  }
  auto it = mults_.find({lower, upper});
  if (it == mults_.end())
    throw AfbError("no multiplicity matrix for pair " + poset_.name(lower) + " < " +
                   poset_.name(upper));
  return it->second;
}

std::string BrattelDiagram::to_text() const {
  std::ostringstream os;
  for (int v = 0; v < poset_.size(); ++v) {
    os << "vertex " << poset_.name(v) << " :";
    for (int n : dims(v)) os << " " << n;
    os << "\n";
  }
  for (const auto& [pair, n] : mults_) {
    os << "edge " << poset_.name(pair.first) << " -> " << poset_.name(pair.second) << " : "
       << n.str() << "\n";
  }
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    // ';' is a token by itself so matrix rows split reliably.
    if (line[i] == ';') {
      tokens.push_back({";", static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != ';' && line[i] != '#')
      ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  try {
    return std::stoll(s);
  } catch (...) {
    return std::nullopt;
  }
}

struct RawEdge {
  std::string src, dst;
  std::vector<std::vector<std::int64_t>> rows;
  int line;
};

} // namespace

BrattelDiagram parse_diagram(const std::string& text) {
  std::vector<std::string> vertex_names;
  std::map<std::string, std::vector<int>> vertex_dims;
  std::vector<RawEdge> edges;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tk = tokenize(line);
    if (tk.empty()) continue;
    if (tk[0].text == "vertex") {
      if (tk.size() < 3 || tk[2].text != ":")
        throw ParseError(line_no, tk[0].column, "expected 'vertex <name> : <sizes>'");
      if (!is_identifier(tk[1].text))
        throw ParseError(line_no, tk[1].column, "vertex name must be an identifier");
      if (vertex_dims.count(tk[1].text))
        throw ParseError(line_no, tk[1].column, "duplicate vertex '" + tk[1].text + "'");
      std::vector<int> dims;
      for (size_t i = 3; i < tk.size(); ++i) {
        auto v = parse_int(tk[i].text);
        if (!v || *v < 1)
          throw ParseError(line_no, tk[i].column, "block size must be a positive integer");
        if (*v > 1'000'000)
          throw ParseError(line_no, tk[i].column, "block size out of supported range");
        dims.push_back(static_cast<int>(*v));
      }
      vertex_names.push_back(tk[1].text);
      vertex_dims[tk[1].text] = std::move(dims);
    } else if (tk[0].text == "edge") {
      if (tk.size() < 5 || tk[2].text != "->" || tk[4].text != ":")
        throw ParseError(line_no, tk[0].column, "expected 'edge <src> -> <dst> : <matrix>'");
      RawEdge e;
      e.src = tk[1].text;
      e.dst = tk[3].text;
      e.line = line_no;
      std::vector<std::int64_t> row;
      for (size_t i = 5; i < tk.size(); ++i) {
        if (tk[i].text == ";") {
          e.rows.push_back(std::move(row));
          row.clear();
        } else {
          auto v = parse_int(tk[i].text);
          if (!v)
            throw ParseError(line_no, tk[i].column, "multiplicity must be a nonnegative integer");
          row.push_back(*v);
        }
      }
      e.rows.push_back(std::move(row));
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, tk[0].column, "unknown directive '" + tk[0].text + "'");
    }
  }

  // Resolve vertices and build the order.
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const RawEdge& e : edges) {
    if (!vertex_dims.count(e.src)) throw ParseError(e.line, 1, "unknown vertex '" + e.src + "'");
    if (!vertex_dims.count(e.dst)) throw ParseError(e.line, 1, "unknown vertex '" + e.dst + "'");
    if (e.src == e.dst) throw ParseError(e.line, 1, "edge from a vertex to itself");
    arcs.push_back({e.src, e.dst});
  }
  FinitePoset poset;
  try {
    poset = FinitePoset(vertex_names, arcs);
  } catch (const AfbError& err) {
    throw ParseError(line_no, 1, err.what());
  }

  std::vector<std::vector<int>> dims(static_cast<size_t>(poset.size()));
  for (int v = 0; v < poset.size(); ++v) dims[static_cast<size_t>(v)] = vertex_dims[poset.name(v)];

  // Shape-check explicit matrices. An edge whose source has zero blocks is
  // written with an empty matrix body; normalize that to k_dst empty rows.
  std::map<std::pair<int, int>, MultiplicityMatrix> explicit_mults;
  for (const RawEdge& e : edges) {
    int a = poset.index_of(e.src);
    int b = poset.index_of(e.dst);
    int k_src = static_cast<int>(dims[static_cast<size_t>(a)].size());
    int k_dst = static_cast<int>(dims[static_cast<size_t>(b)].size());
    std::vector<std::vector<std::int64_t>> rows = e.rows;
    if (k_src == 0) {
      bool all_empty = true;
      for (const auto& r : rows) all_empty = all_empty && r.empty();
      if (!all_empty)
        throw ParseError(e.line, 1, "matrix for edge from a zero-block vertex must be empty");
      rows.assign(static_cast<size_t>(k_dst), {});
    }
    if (static_cast<int>(rows.size()) != k_dst)
      throw ParseError(e.line, 1, "matrix for edge " + e.src + " -> " + e.dst + " needs " +
                                      std::to_string(k_dst) + " rows, got " +
                                      std::to_string(rows.size()));
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != k_src)
        throw ParseError(e.line, 1, "matrix row for edge " + e.src + " -> " + e.dst +
                                        " needs " + std::to_string(k_src) + " entries");
    auto key = std::make_pair(a, b);
    MultiplicityMatrix m(rows);
    auto [it, inserted] = explicit_mults.emplace(key, m);
    if (!inserted && !(it->second == m))
      throw ParseError(e.line, 1, "conflicting matrices for edge " + e.src + " -> " + e.dst);
  }

  // Derive matrices for comparable pairs without an explicit edge by
  // composing along explicit-edge paths; every path must give the same
  // matrix.
  std::map<std::pair<int, int>, MultiplicityMatrix> mults = explicit_mults;
  // adjacency over explicit edges
  std::vector<std::vector<int>> succ(static_cast<size_t>(poset.size()));
  for (const auto& [key, m] : explicit_mults) succ[static_cast<size_t>(key.first)].push_back(key.second);
  for (auto& s : succ) std::sort(s.begin(), s.end());

  for (int a = 0; a < poset.size(); ++a) {
    for (int b = 0; b < poset.size(); ++b) {
      if (!poset.less(a, b) || mults.count({a, b})) continue;
      // Depth-first enumeration of explicit-edge paths a -> b, composing as
      // we go. Poset sizes here are small; path counts stay manageable.
      std::optional<MultiplicityMatrix> derived;
      struct Frame {
        int vertex;
        MultiplicityMatrix so_far; // product of edge matrices from a to vertex
      };
      std::vector<Frame> stack;
      stack.push_back({a, MultiplicityMatrix::identity(static_cast<int>(dims[static_cast<size_t>(a)].size()))});
      while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.vertex == b) {
          if (!derived) {
            derived = f.so_far;
          } else if (!(*derived == f.so_far)) {
            throw ParseError(0, 0, "inconsistent derived matrix for pair " + poset.name(a) +
                                       " < " + poset.name(b) + ": paths disagree");
          }
          continue;
        }
        for (int next : succ[static_cast<size_t>(f.vertex)]) {
          if (!poset.leq(next, b)) continue;
          stack.push_back({next, mults.at({f.vertex, next}) * f.so_far});
        }
      }
      if (!derived)
        throw ParseError(0, 0, "no explicit-edge path for comparable pair " + poset.name(a) +
                                   " < " + poset.name(b));
      mults.emplace(std::make_pair(a, b), *derived);
    }
  }

  return BrattelDiagram(std::move(poset), std::move(dims), std::move(mults));
}

ValidationReport validate_diagram(const BrattelDiagram& d) {
  ValidationReport report;
  const FinitePoset& p = d.poset();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.less(a, b)) continue;
      ++report.pairs_checked;
      std::vector<std::int64_t> na(d.dims(a).begin(), d.dims(a).end());
      std::vector<std::int64_t> image = d.mult(a, b).apply(na);
      for (int k = 0; k < d.num_blocks(b); ++k) {
        if (image[static_cast<size_t>(k)] > d.dims(b)[static_cast<size_t>(k)]) {
          std::ostringstream os;
          os << "dimension bound violated at (" << p.name(a) << "," << p.name(b) << ") block "
             << (k + 1) << ": N*n gives " << image[static_cast<size_t>(k)] << " > "
             << d.dims(b)[static_cast<size_t>(k)];
          report.violations.push_back(os.str());
        }
      }
    }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.less(a, b)) continue;
      for (int c = 0; c < p.size(); ++c) {
        if (!p.less(b, c)) continue;
        ++report.triples_checked;
        MultiplicityMatrix composed = d.mult(b, c) * d.mult(a, b);
        if (!(composed == d.mult(a, c))) {
          std::ostringstream os;
          os << "composition violated at (" << p.name(c) << "," << p.name(b) << ","
             << p.name(a) << "): N[" << p.name(c) << "," << p.name(b) << "]*N[" << p.name(b)
             << "," << p.name(a) << "] = " << composed.str() << " but N[" << p.name(c) << ","
             << p.name(a) << "] = " << d.mult(a, c).str();
          report.violations.push_back(os.str());
        }
      }
    }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

bool is_prime_diagram(const BrattelDiagram& d, std::string* counterexample) {
  const FinitePoset& p = d.poset();
  for (int v1 = 0; v1 < p.size(); ++v1)
    for (int i = 0; i < d.num_blocks(v1); ++i)
      for (int v2 = v1; v2 < p.size(); ++v2)
        for (int j = 0; j < d.num_blocks(v2); ++j) {
          bool witnessed = false;
          for (int u = 0; u < p.size() && !witnessed; ++u) {
            if (!p.leq(v1, u) || !p.leq(v2, u)) continue;
            const MultiplicityMatrix& n1 = d.mult(v1, u);
            const MultiplicityMatrix& n2 = d.mult(v2, u);
            for (int k = 0; k < d.num_blocks(u); ++k) {
              if (n1.at(k, i) > 0 && n2.at(k, j) > 0) {
                witnessed = true;
                break;
              }
            }
          }
          if (!witnessed) {
            if (counterexample) {
              std::ostringstream os;
              os << "(" << p.name(v1) << ", block " << (i + 1) << ") and (" << p.name(v2)
                 << ", block " << (j + 1) << ") are never co-supported";
              *counterexample = os.str();
            }
            return false;
          }
        }
  return true;
}

namespace {

// Block permutation search: assign images block by block per vertex, checking
// sizes and all multiplicity constraints against vertices whose permutation
// is already fixed, then recurse into the next vertex.
bool assign_vertex_blocks(const BrattelDiagram& d1, const BrattelDiagram& d2,
                          const std::vector<int>& vmap, std::vector<std::vector<int>>& bmaps,
                          const std::vector<int>& vertex_order, size_t vpos) {
  if (vpos == vertex_order.size()) return true;
  int v = vertex_order[vpos];
  int w = vmap[static_cast<size_t>(v)];
  std::vector<bool> used(static_cast<size_t>(d2.num_blocks(w)), false);
  // Enumerate permutations for this vertex via recursive block assignment,
  // then recurse into the next vertex; backtrack on failure.
  struct Recurse {
    const BrattelDiagram& d1;
    const BrattelDiagram& d2;
    const std::vector<int>& vmap;
    std::vector<std::vector<int>>& bmaps;
    const std::vector<int>& vertex_order;
    size_t vpos;

    bool run(int block, std::vector<bool>& used) {
      int v = vertex_order[vpos];
      int w = vmap[static_cast<size_t>(v)];
      if (block == d1.num_blocks(v))
        return assign_vertex_blocks(d1, d2, vmap, bmaps, vertex_order, vpos + 1);
      for (int image = 0; image < d2.num_blocks(w); ++image) {
        if (used[static_cast<size_t>(image)]) continue;
        if (d1.dims(v)[static_cast<size_t>(block)] != d2.dims(w)[static_cast<size_t>(image)])
          continue;
        bool ok = true;
        for (size_t q = 0; q < vpos && ok; ++q) {
          int u = vertex_order[q];
          int u2 = vmap[static_cast<size_t>(u)];
          const std::vector<int>& sigma_u = bmaps[static_cast<size_t>(u)];
          if (d1.poset().less(u, v)) {
            const MultiplicityMatrix& m1 = d1.mult(u, v);
            const MultiplicityMatrix& m2 = d2.mult(u2, w);
            for (int col = 0; col < m1.cols() && ok; ++col)
              if (m1.at(block, col) != m2.at(image, sigma_u[static_cast<size_t>(col)]))
                ok = false;
          } else if (d1.poset().less(v, u)) {
            const MultiplicityMatrix& m1 = d1.mult(v, u);
            const MultiplicityMatrix& m2 = d2.mult(w, u2);
            for (int row = 0; row < m1.rows() && ok; ++row)
              if (m1.at(row, block) != m2.at(sigma_u[static_cast<size_t>(row)], image))
                ok = false;
          }
        }
        if (!ok) continue;
        bmaps[static_cast<size_t>(v)][static_cast<size_t>(block)] = image;
        used[static_cast<size_t>(image)] = true;
        if (run(block + 1, used)) return true;
        used[static_cast<size_t>(image)] = false;
      }
      return false;
    }
  };
  Recurse r{d1, d2, vmap, bmaps, vertex_order, vpos};
  return r.run(0, used);
}

std::vector<int> sorted_dims(const BrattelDiagram& d, int v) {
  std::vector<int> s = d.dims(v);
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

std::string DiagramIsomorphism::str(const BrattelDiagram& d1, const BrattelDiagram& d2) const {
  std::ostringstream os;
  for (size_t v = 0; v < vertex_map.size(); ++v) {
    os << d1.poset().name(static_cast<int>(v)) << " -> "
       << d2.poset().name(vertex_map[v]) << " blocks(";
    for (size_t i = 0; i < block_maps[v].size(); ++i) {
      if (i) os << ",";
      os << (block_maps[v][i] + 1);
    }
    os << ")\n";
  }
  return os.str();
}

std::optional<DiagramIsomorphism> diagrams_isomorphic(const BrattelDiagram& d1,
                                                      const BrattelDiagram& d2) {
  int n = d1.poset().size();
  if (n != d2.poset().size()) return std::nullopt;

  // Full search that also records the block maps of the first solution.
  struct Finder {
    const BrattelDiagram& d1;
    const BrattelDiagram& d2;
    std::vector<int> vmap;
    std::vector<bool> used;
    std::vector<std::vector<int>> bmaps;
    std::vector<int> order;

    bool vertices(int v) {
      int n = d1.poset().size();
      if (v == n) {
        bmaps.assign(static_cast<size_t>(n), {});
        for (int a = 0; a < n; ++a)
          bmaps[static_cast<size_t>(a)].assign(static_cast<size_t>(d1.num_blocks(a)), -1);
        return assign_vertex_blocks(d1, d2, vmap, bmaps, order, 0);
      }
      for (int w = 0; w < n; ++w) {
        if (used[static_cast<size_t>(w)]) continue;
        if (sorted_dims(d1, v) != sorted_dims(d2, w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
          if (d1.poset().leq(u, v) != d2.poset().leq(vmap[static_cast<size_t>(u)], w)) ok = false;
          if (d1.poset().leq(v, u) != d2.poset().leq(w, vmap[static_cast<size_t>(u)])) ok = false;
        }
        if (!ok) continue;
        vmap[static_cast<size_t>(v)] = w;
        used[static_cast<size_t>(w)] = true;
        if (vertices(v + 1)) return true;
        used[static_cast<size_t>(w)] = false;
      }
      return false;
    }
  };

  Finder finder{d1, d2, std::vector<int>(static_cast<size_t>(n), -1),
                std::vector<bool>(static_cast<size_t>(n), false), {}, {}};
  finder.order.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) finder.order[static_cast<size_t>(i)] = i;
  if (!finder.vertices(0)) return std::nullopt;

  DiagramIsomorphism iso;
  iso.vertex_map = finder.vmap;
  iso.block_maps = finder.bmaps;
  return iso;
}

} // namespace afb
