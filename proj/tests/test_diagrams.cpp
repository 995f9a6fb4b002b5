#include <fstream>
#include <sstream>

#include "builtin.hpp"
#include "doctest.h"

using namespace afb;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int count_comparable_pairs(const BrattelDiagram& d) {
  int count = 0;
  for (int a = 0; a < d.poset().size(); ++a)
    for (int b = 0; b < d.poset().size(); ++b)
      if (d.poset().less(a, b)) ++count;
  return count;
}

} // namespace

TEST_CASE("poset construction and queries") {
  FinitePoset p({"a", "b", "c", "d", "e"},
                {{"b", "a"}, {"c", "a"}, {"d", "b"}, {"d", "c"}, {"e", "b"}, {"e", "c"}});
  CHECK(p.size() == 5);
  CHECK(p.less(p.index_of("d"), p.index_of("a"))); // transitivity
  CHECK_FALSE(p.comparable(p.index_of("b"), p.index_of("c")));
  CHECK_FALSE(p.is_chain());
  CHECK(p.is_directed());
  CHECK(p.hasse_edges().size() == 6); // composite arcs are not covers

  CHECK_THROWS_WITH_AS(FinitePoset({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
                       doctest::Contains("cycle"), AfbError);

  FinitePoset chain({"s1", "s2", "s3"}, {{"s1", "s2"}, {"s2", "s3"}});
  CHECK(chain.is_chain());
}

TEST_CASE("parsing the shipped five-stage example") {
  BrattelDiagram d = parse_diagram(read_file(std::string(AFB_DATA_DIR) +
                                             "/example_nonrealizable.diag"));
  CHECK(d.poset().size() == 5);
  CHECK(count_comparable_pairs(d) == 8);
  int a = d.poset().index_of("a");
  int b = d.poset().index_of("b");
  int d_v = d.poset().index_of("d");
  CHECK(d.dims(a) == std::vector<int>{24});
  CHECK(d.mult(d_v, b) == MultiplicityMatrix({{1, 1}, {1, 1}}));
  CHECK(d.mult(d_v, a) == MultiplicityMatrix({{6, 6}}));

  // Same diagram as the builtin, and its composition identities hold.
  BrattelDiagram built = builtin_diagram("example-nonrealizable", 0);
  CHECK(diagrams_isomorphic(d, built).has_value());
  CHECK(d.mult(b, a) * d.mult(d_v, b) == d.mult(d_v, a));

  ValidationReport report = validate_diagram(d);
  CHECK(report.ok());
  CHECK(report.pairs_checked == 8);
}

TEST_CASE("single vertex and parse errors") {
  BrattelDiagram d = parse_diagram("vertex a : 2\n");
  CHECK(d.poset().size() == 1);
  CHECK(d.dims(0) == std::vector<int>{2});
  CHECK(validate_diagram(d).ok());

  CHECK_THROWS_WITH_AS(parse_diagram("vertex a : 2\nedge a -> z : 1\n"),
                       doctest::Contains("unknown vertex"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("vertex a : x\n"), doctest::Contains("positive integer"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("vertex a : 2\nvertex b : 2\n"
                                     "edge a -> b : 1\nedge b -> a : 1\n"),
                       doctest::Contains("cycle"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("vertex a : 2\nvertex a : 3\n"),
                       doctest::Contains("duplicate"), ParseError);
  // Wrong matrix shape, reported with the line.
  try {
    parse_diagram("vertex a : 2 2\nvertex b : 4\nedge a -> b : 1 1 ; 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("1 rows") != std::string::npos);
  }
}

TEST_CASE("derived matrices must be path-consistent") {
  // Two explicit routes from d to a that disagree: derivation fails.
  // Via b the composite is 2*1 = 2; via c it is 2*2 = 4.
  std::string text =
      "vertex a : 4\nvertex b : 2\nvertex c : 2\nvertex d : 1\n"
      "edge d -> b : 1\nedge d -> c : 2\n"
      "edge b -> a : 2\nedge c -> a : 2\n";
  CHECK_THROWS_WITH_AS(parse_diagram(text), doctest::Contains("paths disagree"), ParseError);

  // Agreeing routes derive the composite.
  std::string good =
      "vertex a : 4\nvertex b : 2\nvertex c : 2\nvertex d : 1\n"
      "edge d -> b : 2\nedge d -> c : 2\n"
      "edge b -> a : 2\nedge c -> a : 2\n";
  BrattelDiagram d = parse_diagram(good);
  CHECK(d.mult(d.poset().index_of("d"), d.poset().index_of("a")) ==
        MultiplicityMatrix({{4}}));
}

TEST_CASE("validation reports violations with witnesses") {
  // The shipped example with one matrix perturbed.
  std::string text = read_file(std::string(AFB_DATA_DIR) + "/example_nonrealizable.diag");
  std::string broken = text;
  size_t pos = broken.find("edge d -> a : 6 6");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 17, "edge d -> a : 6 7");
  BrattelDiagram d = parse_diagram(broken);
  ValidationReport report = validate_diagram(d);
  CHECK_FALSE(report.ok());
  bool found_composition = false;
  for (const std::string& v : report.violations)
    if (v.find("composition violated at (a,b,d)") != std::string::npos)
      found_composition = true;
  CHECK(found_composition);

  // A unital chain passes.
  BrattelDiagram chain = parse_diagram(
      "vertex s1 : 1\nvertex s2 : 2\nvertex s3 : 4\n"
      "edge s1 -> s2 : 2\nedge s2 -> s3 : 2\n");
  CHECK(validate_diagram(chain).ok());

  // Dimension bound violations are caught.
  BrattelDiagram bad = parse_diagram("vertex s1 : 3\nvertex s2 : 4\nedge s1 -> s2 : 2\n");
  ValidationReport r2 = validate_diagram(bad);
  CHECK_FALSE(r2.ok());
  CHECK(r2.violations.front().find("dimension bound") != std::string::npos);
}

TEST_CASE("canonical serialization round-trips") {
  BrattelDiagram d = builtin_diagram("example-nonrealizable", 0);
  BrattelDiagram reparsed = parse_diagram(d.to_text());
  CHECK(reparsed.to_text() == d.to_text());

  // Zero-block vertices survive the round trip.
  BrattelDiagram fs = builtin_diagram("finite-subsets", 2, /*include_empty=*/true);
  CHECK(fs.poset().size() == 4);
  CHECK(fs.dims(fs.poset().index_of("O")).empty());
  CHECK(fs.dims(fs.poset().index_of("ab")) == std::vector<int>{2});
  BrattelDiagram fs2 = parse_diagram(fs.to_text());
  CHECK(fs2.to_text() == fs.to_text());
  CHECK(validate_diagram(fs2).ok());
}

TEST_CASE("finite subsets without the empty set") {
  BrattelDiagram fs = builtin_diagram("finite-subsets", 3);
  CHECK(fs.poset().size() == 7);
  CHECK(validate_diagram(fs).ok());
  for (int v = 0; v < fs.poset().size(); ++v) CHECK(fs.dims(v).size() == 1);
}

TEST_CASE("primeness of diagrams") {
  // All multiplicities into the top are strictly positive: prime.
  CHECK(is_prime_diagram(builtin_diagram("example-nonrealizable", 0)));

  // A single full block is trivially prime.
  CHECK(is_prime_diagram(parse_diagram("vertex a : 2\n")));

  // A single vertex with two blocks is not.
  std::string why;
  CHECK_FALSE(is_prime_diagram(parse_diagram("vertex a : 2 2\n"), &why));
  CHECK(why.find("never co-supported") != std::string::npos);

  // Two disjoint chains with a block-diagonal join: never co-supported.
  std::string control =
      "vertex u1 : 1 1\nvertex u2 : 1 1\nvertex v1 : 1 1\nvertex v2 : 1 1\n"
      "vertex top : 2 2\n"
      "edge u1 -> u2 : 1 0 ; 0 1\nedge v1 -> v2 : 1 0 ; 0 1\n"
      "edge u2 -> top : 1 0 ; 0 1\nedge v2 -> top : 1 0 ; 0 1\n";
  BrattelDiagram dc = parse_diagram(control);
  CHECK(validate_diagram(dc).ok());
  CHECK_FALSE(is_prime_diagram(dc));

  // Mixing at the top makes the same poset prime.
  std::string mixed =
      "vertex u1 : 1\nvertex v1 : 1\nvertex top : 2\n"
      "edge u1 -> top : 1\nedge v1 -> top : 1\n";
  CHECK(is_prime_diagram(parse_diagram(mixed)));
}

TEST_CASE("diagram isomorphism search") {
  BrattelDiagram d = builtin_diagram("example-nonrealizable", 0);
  auto self = diagrams_isomorphic(d, d);
  REQUIRE(self.has_value());
  for (size_t v = 0; v < self->vertex_map.size(); ++v)
    CHECK(self->vertex_map[v] == static_cast<int>(v));

  // Same diagram under renamed vertices and permuted blocks.
  std::string renamed =
      "vertex top : 24\nvertex p : 4 4\nvertex q : 6 6\nvertex x : 3 1\nvertex y : 2 2\n"
      "edge p -> top : 3 3\nedge q -> top : 2 2\n"
      "edge x -> p : 1 1 ; 1 1\nedge y -> p : 1 1 ; 1 1\n"
      "edge x -> q : 1 3 ; 2 0\nedge y -> q : 1 2 ; 2 1\n"
      "edge x -> top : 6 6\nedge y -> top : 6 6\n";
  BrattelDiagram d2 = parse_diagram(renamed);
  CHECK(validate_diagram(d2).ok());
  auto iso = diagrams_isomorphic(d, d2);
  REQUIRE(iso.has_value());
  // d's vertex d has dims (1,3); the renamed diagram lists (3,1) at x.
  int vd = d.poset().index_of("d");
  CHECK(d2.poset().name(iso->vertex_map[static_cast<size_t>(vd)]) == "x");
  CHECK(iso->block_maps[static_cast<size_t>(vd)] == std::vector<int>{1, 0});

  // The found isomorphism inverts: applying it backwards also works.
  auto back = diagrams_isomorphic(d2, d);
  REQUIRE(back.has_value());

  // Mismatched dimension vectors: no isomorphism.
  BrattelDiagram a = parse_diagram("vertex a : 1 2\n");
  BrattelDiagram b = parse_diagram("vertex a : 2 2\n");
  CHECK_FALSE(diagrams_isomorphic(a, b).has_value());
}

TEST_CASE("unknown builtin is rejected") {
  CHECK_THROWS_WITH_AS(builtin_diagram("no-such", 2), doctest::Contains("unknown builtin"),
                       AfbError);
}
