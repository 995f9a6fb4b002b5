#include <random>

#include "builtin.hpp"
#include "doctest.h"
#include "realize.hpp"

using namespace afb;

namespace {

// Random valid unital chains: dimension vectors built upward from random
// multiplicity matrices.
BrattelDiagram random_chain(std::mt19937& rng, int stages, int max_blocks, int max_size) {
  std::uniform_int_distribution<int> nblocks(1, max_blocks);
  std::uniform_int_distribution<int> entry(0, 2);
  std::vector<std::vector<int>> dims;
  dims.push_back({});
  int k0 = nblocks(rng);
  for (int i = 0; i < k0; ++i) dims[0].push_back(1 + entry(rng));
  std::vector<MultiplicityMatrix> steps;
  for (int s = 1; s < stages; ++s) {
    int k = nblocks(rng);
    const std::vector<int>& prev = dims.back();
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<int> next;
    for (int j = 0; j < k; ++j) {
      std::vector<std::int64_t> row;
      std::int64_t total = 0;
      for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
        std::int64_t e = entry(rng);
        // Keep block sizes within the cap.
        while (e > 0 && total + e * prev[static_cast<size_t>(i)] > max_size) --e;
        row.push_back(e);
        total += e * prev[static_cast<size_t>(i)];
      }
      if (total == 0) {
        row[0] = 1;
        total = prev[0];
      }
      rows.push_back(std::move(row));
      next.push_back(static_cast<int>(total));
    }
    steps.push_back(MultiplicityMatrix(rows));
    dims.push_back(std::move(next));
  }

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int s = 0; s < stages; ++s) names.push_back("s" + std::to_string(s + 1));
  for (int s = 0; s + 1 < stages; ++s) arcs.push_back({names[static_cast<size_t>(s)], names[static_cast<size_t>(s + 1)]});
  FinitePoset poset(names, arcs);
  std::vector<std::vector<int>> dim_by_vertex(static_cast<size_t>(stages));
  for (int s = 0; s < stages; ++s)
    dim_by_vertex[static_cast<size_t>(poset.index_of(names[static_cast<size_t>(s)]))] =
        dims[static_cast<size_t>(s)];
  std::map<std::pair<int, int>, MultiplicityMatrix> mults;
  for (int lo = 0; lo < stages; ++lo) {
    MultiplicityMatrix acc = MultiplicityMatrix::identity(static_cast<int>(dims[static_cast<size_t>(lo)].size()));
    for (int hi = lo + 1; hi < stages; ++hi) {
      acc = steps[static_cast<size_t>(hi - 1)] * acc;
      mults.emplace(std::make_pair(poset.index_of(names[static_cast<size_t>(lo)]),
                                   poset.index_of(names[static_cast<size_t>(hi)])),
                    acc);
    }
  }
  return BrattelDiagram(std::move(poset), std::move(dim_by_vertex), std::move(mults));
}

} // namespace

TEST_CASE("chain realization with standard wirings") {
  BrattelDiagram d = parse_diagram(
      "vertex s1 : 1\nvertex s2 : 2\nvertex s3 : 6\n"
      "edge s1 -> s2 : 2\nedge s2 -> s3 : 3\n");
  InductiveSystem sys = realize_chain(d);
  CHECK(sys.check_functoriality().empty());
  int s1 = d.poset().index_of("s1");
  int s3 = d.poset().index_of("s3");
  CHECK(sys.map(s1, s3).multiplicity() == MultiplicityMatrix({{6}}));
  CHECK(sys.to_diagram().to_text() == d.to_text());

  // A single vertex realizes trivially.
  InductiveSystem single = realize_chain(parse_diagram("vertex only : 3\n"));
  CHECK(single.poset().size() == 1);

  // Two incomparable vertices do not form a chain.
  CHECK_THROWS_AS(realize_chain(parse_diagram("vertex a : 1\nvertex b : 1\n")), AfbError);
}

TEST_CASE("two-block chain composite multiplicities") {
  BrattelDiagram d = parse_diagram(
      "vertex s1 : 1 1\nvertex s2 : 2 2\nvertex s3 : 4 4\n"
      "edge s1 -> s2 : 1 1 ; 1 1\nedge s2 -> s3 : 1 1 ; 1 1\n");
  InductiveSystem sys = realize_chain(d);
  CHECK(sys.map(d.poset().index_of("s1"), d.poset().index_of("s3")).multiplicity() ==
        MultiplicityMatrix({{2, 2}, {2, 2}}));
}

TEST_CASE("search finds witnesses on chains and forks") {
  BrattelDiagram chain = parse_diagram(
      "vertex s1 : 2\nvertex s2 : 4\nvertex s3 : 8\n"
      "edge s1 -> s2 : 2\nedge s2 -> s3 : 2\n");
  RealizeResult r = search_realization(chain);
  REQUIRE(r.status == RealizeStatus::Witness);
  CHECK(r.witness->check_functoriality().empty());
  CHECK(r.witness->to_diagram().to_text() == chain.to_text());

  // No two paths share endpoints: any valid fork realizes.
  BrattelDiagram fork = parse_diagram(
      "vertex d : 1\nvertex b : 2\nvertex c : 3\n"
      "edge d -> b : 2\nedge d -> c : 3\n");
  RealizeResult rf = search_realization(fork);
  REQUIRE(rf.status == RealizeStatus::Witness);
  CHECK(rf.witness->check_functoriality().empty());
}

TEST_CASE("search certifies the nonrealizable five-stage example") {
  BrattelDiagram d = builtin_diagram("example-nonrealizable", 0);
  RealizeResult r = search_realization(d);
  CHECK(r.status == RealizeStatus::NoRealization);
  CHECK(r.nodes < 10'000'000);

  // A tight budget is reported as exhaustion, not refutation.
  RealizeResult tight = search_realization(d, 50);
  CHECK(tight.status == RealizeStatus::BudgetExhausted);
}

TEST_CASE("diamond posets constrain the search but realize") {
  // d below b and c, both below a; all multiplicities 1 on M2 blocks.
  BrattelDiagram diamond = parse_diagram(
      "vertex d : 2\nvertex b : 2\nvertex c : 2\nvertex a : 2\n"
      "edge d -> b : 1\nedge d -> c : 1\nedge b -> a : 1\nedge c -> a : 1\n");
  RealizeResult r = search_realization(diamond);
  REQUIRE(r.status == RealizeStatus::Witness);
  CHECK(r.witness->check_functoriality().empty());
}

TEST_CASE("randomized chains realize with matching data") {
  std::mt19937 rng(123457);
  for (int trial = 0; trial < 25; ++trial) {
    BrattelDiagram d = random_chain(rng, 2 + trial % 3, 2, 8);
    REQUIRE(validate_diagram(d).ok());
    RealizeResult r = search_realization(d);
    REQUIRE(r.status == RealizeStatus::Witness);
    CHECK(r.witness->check_functoriality().empty());
    CHECK(r.witness->to_diagram().to_text() == d.to_text());
  }
}

TEST_CASE("search rejects invalid diagrams") {
  BrattelDiagram bad = parse_diagram("vertex s1 : 3\nvertex s2 : 4\nedge s1 -> s2 : 2\n");
  CHECK_THROWS_WITH_AS(search_realization(bad), doctest::Contains("not valid"), AfbError);
}
