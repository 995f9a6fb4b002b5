#include "builtin.hpp"

#include "prime.hpp"
#include "twin.hpp"

namespace afb {

namespace {

BrattelDiagram example_nonrealizable() {
  // Order: b, c below a; d, e below b and c.
  std::vector<std::string> names = {"a", "b", "c", "d", "e"};
  std::vector<std::pair<std::string, std::string>> arcs = {
      {"b", "a"}, {"c", "a"}, {"d", "b"}, {"d", "c"}, {"e", "b"}, {"e", "c"},
  };
  FinitePoset poset(names, arcs);
  auto dims_of = [&](const std::string& n, std::vector<int> v) {
    return std::make_pair(poset.index_of(n), std::move(v));
  };
  std::vector<std::vector<int>> dims(5);
  for (auto& [v, d] : {dims_of("a", {24}), dims_of("b", {4, 4}), dims_of("c", {6, 6}),
                       dims_of("d", {1, 3}), dims_of("e", {2, 2})})
    dims[static_cast<size_t>(v)] = d;

  std::map<std::pair<int, int>, MultiplicityMatrix> mults;
  auto put = [&](const std::string& lo, const std::string& hi,
                 std::vector<std::vector<std::int64_t>> m) {
    mults.emplace(std::make_pair(poset.index_of(lo), poset.index_of(hi)),
                  MultiplicityMatrix(std::move(m)));
  };
  put("b", "a", {{3, 3}});
  put("c", "a", {{2, 2}});
  put("d", "b", {{1, 1}, {1, 1}});
  put("e", "b", {{1, 1}, {1, 1}});
  put("d", "c", {{3, 1}, {0, 2}});
  put("e", "c", {{1, 2}, {2, 1}});
  put("d", "a", {{6, 6}});
  put("e", "a", {{6, 6}});
  return BrattelDiagram(std::move(poset), std::move(dims), std::move(mults));
}

BrattelDiagram finite_subsets(int size, bool include_empty) {
  if (size < 1) throw AfbError("finite-subsets needs a positive size");
  if (size > 10) throw AfbError("finite-subsets size out of supported range");
  std::vector<unsigned> masks;
  for (unsigned m = include_empty ? 0u : 1u; m < (1u << size); ++m) masks.push_back(m);
  auto name_of = [&](unsigned m) {
    if (m == 0) return std::string("O");
    std::string s;
    for (int p = 0; p < size; ++p)
      if (m & (1u << p)) s += static_cast<char>('a' + p);
    return s;
  };
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> arcs;
  for (unsigned m : masks) names.push_back(name_of(m));
  for (unsigned m1 : masks)
    for (unsigned m2 : masks)
      if (m1 != m2 && (m1 & m2) == m1) arcs.push_back({name_of(m1), name_of(m2)});
  FinitePoset poset(names, arcs);

  std::vector<std::vector<int>> dims(static_cast<size_t>(poset.size()));
  for (unsigned m : masks) {
    int v = poset.index_of(name_of(m));
    if (m == 0)
      dims[static_cast<size_t>(v)] = {};
    else
      dims[static_cast<size_t>(v)] = {__builtin_popcount(m)};
  }
  std::map<std::pair<int, int>, MultiplicityMatrix> mults;
  for (unsigned m1 : masks)
    for (unsigned m2 : masks) {
      if (m1 == m2 || (m1 & m2) != m1) continue;
      int a = poset.index_of(name_of(m1));
      int b = poset.index_of(name_of(m2));
      int ka = m1 == 0 ? 0 : 1;
      MultiplicityMatrix n = MultiplicityMatrix::zero(1, ka);
      if (ka == 1) n.at(0, 0) = 1;
      mults.emplace(std::make_pair(a, b), std::move(n));
    }
  return BrattelDiagram(std::move(poset), std::move(dims), std::move(mults));
}

} // namespace

BrattelDiagram builtin_diagram(const std::string& name, int size, bool include_empty) {
  if (name == "example-nonrealizable") return example_nonrealizable();
  if (name == "finite-subsets") return finite_subsets(size, include_empty);
  if (name == "twin-a" || name == "twin-b") {
    TwinGround ground(size);
    return twin_diagram(ground, name == "twin-a" ? TwinVariant::A : TwinVariant::B);
  }
  if (name == "prime") {
    if (size > 4) throw AfbError("prime diagram capped at size 4 (blocks grow as n!)");
    PrimeGround ground(size);
    return prime_stage_diagram(ground, /*full_verify=*/size <= 3);
  }
  throw AfbError("unknown builtin diagram '" + name + "'");
}

} // namespace afb
