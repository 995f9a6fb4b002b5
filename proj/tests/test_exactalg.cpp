#include <random>

#include "center.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace afb;

namespace {

Element unit_of(const MultiMatrixAlgebra& a, int b, int r, int c) {
  return Element::matrix_unit(a, {b, r, c});
}

// Deterministic random elements with small exact entries.
Element random_element(std::mt19937& rng, const MultiMatrixAlgebra& alg) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> val(-2, 2);
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (int b = 0; b < alg.num_blocks(); ++b)
    for (int r = 0; r < alg.block_size(b); ++r)
      for (int c = 0; c < alg.block_size(b); ++c) {
        if (coin(rng) == 0) {
          Scalar v(Rational(val(rng)), Rational(val(rng)));
          if (!v.is_zero()) entries.push_back({{b, r, c}, v});
        }
      }
  return Element(alg, std::move(entries));
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK((a + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
  CHECK((Rational(1) / Rational(-2)) == Rational(-1, 2));
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), AfbError);

  Scalar z(Rational(1, 2), Rational(3));
  CHECK(z.conj() == Scalar(Rational(1, 2), Rational(-3)));
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK((z / z) == Scalar::one());
}

TEST_CASE("algebra constructor and dimension") {
  CHECK(MultiMatrixAlgebra({24}).dimension() == 576);
  CHECK(MultiMatrixAlgebra({1, 3}).dimension() == 10);
  CHECK(MultiMatrixAlgebra({4, 4}).dimension() == 32);
  CHECK(MultiMatrixAlgebra().dimension() == 0); // zero algebra
  CHECK_THROWS_AS(MultiMatrixAlgebra({2, 0}), AfbError);
  CHECK_THROWS_AS(MultiMatrixAlgebra({-1}), AfbError);
}

TEST_CASE("matrix units and block arithmetic") {
  MultiMatrixAlgebra m2({2});
  Element e11 = unit_of(m2, 0, 0, 0);
  Element e12 = unit_of(m2, 0, 0, 1);
  Element e21 = unit_of(m2, 0, 1, 0);
  Element e22 = unit_of(m2, 0, 1, 1);

  CHECK(e11 * e11 == e11);
  CHECK(e12 * e21 == e11);
  CHECK(e21 * e12 == e22);
  CHECK(e11 * e22 == Element::zero(m2));
  CHECK(e12.adjoint() == e21);
  CHECK(e11.is_projection());
  CHECK_FALSE(e12.is_projection());

  CHECK(commutator(e11, e11).is_zero());
  CHECK(commutator(e12, e21) == e11 - e22);

  MultiMatrixAlgebra line({1, 1});
  CHECK(commutator(unit_of(line, 0, 0, 0), unit_of(line, 1, 0, 0)).is_zero());

  CHECK_THROWS_AS(Element::matrix_unit(m2, {0, 2, 0}), AfbError);
  CHECK_THROWS_AS(Element::matrix_unit(m2, {1, 0, 0}), AfbError);
  MultiMatrixAlgebra m3({3});
  CHECK_THROWS_AS(unit_of(m2, 0, 0, 0) * Element::unit(m3), AfbError);
}

TEST_CASE("product, adjoint and associativity on random exact elements") {
  std::mt19937 rng(20240811);
  std::vector<MultiMatrixAlgebra> algebras = {MultiMatrixAlgebra({2}),
                                              MultiMatrixAlgebra({1, 2}),
                                              MultiMatrixAlgebra({3, 1, 2})};
  for (const auto& alg : algebras) {
    for (int trial = 0; trial < 25; ++trial) {
      Element a = random_element(rng, alg);
      Element b = random_element(rng, alg);
      Element c = random_element(rng, alg);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a.adjoint().adjoint() == a);
      CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("block ranks") {
  MultiMatrixAlgebra alg({2, 3});
  Element x = unit_of(alg, 0, 0, 0) + unit_of(alg, 1, 0, 1) + unit_of(alg, 1, 1, 2);
  CHECK(x.block_ranks() == std::vector<int>{1, 2});
  Element dependent = unit_of(alg, 1, 0, 0) + unit_of(alg, 1, 0, 1) +
                      unit_of(alg, 1, 1, 0) + unit_of(alg, 1, 1, 1);
  CHECK(dependent.block_ranks() == std::vector<int>{0, 1});
}

TEST_CASE("ideal generated by elements is a set of blocks") {
  MultiMatrixAlgebra alg({2, 1});
  CHECK(ideal_generated_by(alg, {Element::zero(alg)}).empty());
  CHECK(ideal_generated_by(alg, {unit_of(alg, 0, 0, 1)}) == std::vector<int>{0});

  // Commutators of a multi-matrix algebra generate exactly the blocks of
  // size at least two; membership matches support containment.
  std::mt19937 rng(7);
  MultiMatrixAlgebra mixed({2, 1, 3, 1});
  std::vector<Element> comms;
  for (int trial = 0; trial < 40; ++trial)
    comms.push_back(commutator(random_element(rng, mixed), random_element(rng, mixed)));
  std::vector<int> blocks = ideal_generated_by(mixed, comms);
  for (int b : blocks) CHECK(mixed.block_size(b) >= 2);
  for (const Element& c : comms) CHECK(ideal_contains(blocks, c));
}

TEST_CASE("decomposition of a full matrix block") {
  MultiMatrixAlgebra m2({2});
  std::vector<Element> span;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) span.push_back(unit_of(m2, 0, r, c));
  SubalgebraDecomposition dec = decompose_span(span);
  CHECK(dec.idempotents.size() == 1);
  CHECK(dec.idempotents[0] == Element::unit(m2));
  CHECK(dec.summand_sizes == std::vector<int>{2});
}

TEST_CASE("decomposition of a diagonal subalgebra of M2") {
  MultiMatrixAlgebra m2({2});
  std::vector<Element> span = {unit_of(m2, 0, 0, 0), unit_of(m2, 0, 1, 1)};
  SubalgebraDecomposition dec = decompose_span(span);
  CHECK(dec.summand_sizes == std::vector<int>{1, 1});
  for (const Element& e : dec.idempotents) CHECK(e.is_projection());

  // Orthogonality and sum-to-unit.
  CHECK(dec.idempotents[0] * dec.idempotents[1] == Element::zero(m2));
  CHECK(dec.idempotents[0] + dec.idempotents[1] == dec.unit);
}

TEST_CASE("decomposition needs a multiplicatively closed span") {
  MultiMatrixAlgebra m2({2});
  // e12 alone: not closed under adjoints or products.
  CHECK_THROWS_AS(decompose_span({unit_of(m2, 0, 0, 1)}), AfbError);
}

TEST_CASE("decomposition splits a permutation-symmetry subalgebra") {
  // Span of the identity and the coordinate swap in M2: two lines.
  MultiMatrixAlgebra m2({2});
  Element swap = unit_of(m2, 0, 0, 1) + unit_of(m2, 0, 1, 0);
  SubalgebraDecomposition dec = decompose_span({Element::unit(m2), swap});
  CHECK(dec.summand_sizes == std::vector<int>{1, 1});
  // The projections (1 ± swap)/2 are not coordinate-aligned; verify honestly.
  for (const Element& e : dec.idempotents) {
    CHECK(e.is_projection());
    CHECK(commutator(e, swap).is_zero());
  }

  // Independent oracle agrees on dimension and summand count.
  afb_test::DecompositionOracle oracle = afb_test::oracle_decomposition({Element::unit(m2), swap});
  CHECK(oracle.dimension == 2);
  CHECK(oracle.num_summands == 2);
  CHECK(oracle.unique);
  CHECK(oracle.sizes_descending == std::vector<int>{1, 1});
}

TEST_CASE("decomposition properties on random unit-closed spans") {
  // Spans generated by a few matrix units and closed by construction:
  // diagonal + selected off-diagonal pairs.
  MultiMatrixAlgebra alg({2, 1});
  std::vector<Element> span = {unit_of(alg, 0, 0, 0), unit_of(alg, 0, 1, 1),
                               unit_of(alg, 0, 0, 1), unit_of(alg, 0, 1, 0),
                               unit_of(alg, 1, 0, 0)};
  SubalgebraDecomposition dec = decompose_span(span);
  CHECK(dec.summand_sizes == std::vector<int>{2, 1});
  // Pairwise orthogonal, central in the span, summing to the unit.
  Element sum = Element::zero(alg);
  for (const Element& e : dec.idempotents) {
    CHECK(e.is_projection());
    for (const Element& b : span) CHECK(commutator(e, b).is_zero());
    sum = sum + e;
  }
  CHECK(sum == dec.unit);
  CHECK(dec.unit == Element::unit(alg));
}
