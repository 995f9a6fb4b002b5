#include <random>

#include "center.hpp"
#include "doctest.h"
#include "wiring.hpp"

using namespace afb;

TEST_CASE("standard wiring shapes and errors") {
  MultiMatrixAlgebra src({1, 3});
  MultiMatrixAlgebra dst({4, 4});
  MultiplicityMatrix n({{1, 1}, {1, 1}});
  Wiring w = Wiring::standard(src, dst, n);
  CHECK(w.multiplicity() == n);

  MultiMatrixAlgebra src2({6, 6});
  MultiMatrixAlgebra dst2({24});
  Wiring w2 = Wiring::standard(src2, dst2, MultiplicityMatrix({{2, 2}}));
  CHECK(w2.multiplicity() == MultiplicityMatrix({{2, 2}}));

  MultiMatrixAlgebra m2({2});
  Wiring ident = Wiring::standard(m2, m2, MultiplicityMatrix({{1}}));
  CHECK(ident == Wiring::identity(m2));

  // 2*2 + 2*2 > 6: rejected with the offending target block.
  CHECK_THROWS_WITH_AS(Wiring::standard(m2, MultiMatrixAlgebra({6}),
                                        MultiplicityMatrix({{4}})),
                       doctest::Contains("target block 1"), AfbError);
}

TEST_CASE("apply is the induced homomorphism") {
  MultiMatrixAlgebra m2({2});
  Wiring ident = Wiring::identity(m2);
  Element x = Element::matrix_unit(m2, {0, 0, 1}) + Element::unit(m2).scaled(Scalar(3));
  CHECK(ident.apply(x) == x);

  // Two copies of a line fill M2: the unit goes to the identity.
  MultiMatrixAlgebra line({1});
  Wiring doubled = Wiring::standard(line, m2, MultiplicityMatrix({{2}}));
  CHECK(doubled.apply(Element::unit(line)) == Element::unit(m2));

  CHECK_THROWS_AS(doubled.apply(Element::unit(m2)), AfbError);
}

TEST_CASE("wirings preserve products, adjoints and projections") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> sz(1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    MultiMatrixAlgebra src({sz(rng), sz(rng)});
    // Target large enough for a couple of copies.
    int n0 = 2 * src.block_size(0) + src.block_size(1) + sz(rng) - 1;
    int n1 = src.block_size(0) + sz(rng) - 1 + 1;
    MultiMatrixAlgebra dst({n0, n1});
    MultiplicityMatrix n({{2, 1}, {1, 0}});
    Wiring w = Wiring::standard(src, dst, n);
    CHECK(check_homomorphism(w).empty());
    CHECK(w.multiplicity() == n);

    // Projection preservation on a concrete projection.
    Element p = Element::matrix_unit(src, {0, 0, 0});
    CHECK(w.apply(p).is_projection());
  }
}

TEST_CASE("exhaustive homomorphism identities on mid-size algebras") {
  // One deliberately large pair (total dimension above 500) checked on all
  // matrix units via the generic checker.
  MultiMatrixAlgebra src({5, 3});
  MultiMatrixAlgebra dst({17, 11});
  MultiplicityMatrix n({{2, 2}, {1, 2}});
  Wiring w = Wiring::standard(src, dst, n);
  CHECK((src.dimension() + dst.dimension()) > 400);
  CHECK(check_homomorphism(w).empty());
}

TEST_CASE("composition multiplies multiplicities") {
  MultiMatrixAlgebra d({1, 3});
  MultiMatrixAlgebra b({4, 4});
  MultiMatrixAlgebra a({24});
  MultiplicityMatrix n_bd({{1, 1}, {1, 1}});
  MultiplicityMatrix n_ab({{3, 3}});
  Wiring f = Wiring::standard(d, b, n_bd);
  Wiring g = Wiring::standard(b, a, n_ab);
  Wiring gf = compose(g, f);
  CHECK(gf.multiplicity() == MultiplicityMatrix({{6, 6}}));
  CHECK(gf.multiplicity() == n_ab * n_bd);

  CHECK(compose(f, Wiring::identity(d)) == f);
  CHECK(compose(Wiring::identity(b), f) == f);

  CHECK_THROWS_AS(compose(f, g), AfbError);
}

TEST_CASE("composition is associative in normal form") {
  MultiMatrixAlgebra a({1});
  MultiMatrixAlgebra b({2, 1});
  MultiMatrixAlgebra c({4, 2});
  MultiMatrixAlgebra d({9});
  Wiring f = Wiring::standard(a, b, MultiplicityMatrix({{2}, {1}}));
  Wiring g = Wiring::standard(b, c, MultiplicityMatrix({{1, 2}, {0, 1}}));
  Wiring h = Wiring::standard(c, d, MultiplicityMatrix({{1, 2}}));
  CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
}

TEST_CASE("apply composes") {
  std::mt19937 rng(99);
  MultiMatrixAlgebra a({2, 1});
  MultiMatrixAlgebra b({3, 4});
  MultiMatrixAlgebra c({11});
  Wiring f = Wiring::standard(a, b, MultiplicityMatrix({{1, 1}, {1, 2}}));
  Wiring g = Wiring::standard(b, c, MultiplicityMatrix({{1, 2}}));
  Wiring gf = compose(g, f);
  for (int blockIdx = 0; blockIdx < a.num_blocks(); ++blockIdx)
    for (int r = 0; r < a.block_size(blockIdx); ++r)
      for (int s = 0; s < a.block_size(blockIdx); ++s) {
        Element u = Element::matrix_unit(a, {blockIdx, r, s});
        CHECK(gf.apply(u) == g.apply(f.apply(u)));
      }
}

TEST_CASE("multiplicity equals rank of the image of a minimal projection") {
  MultiMatrixAlgebra src({2, 1});
  MultiMatrixAlgebra dst({5, 3});
  MultiplicityMatrix n({{2, 1}, {0, 3}});
  Wiring w = Wiring::standard(src, dst, n);
  for (int i = 0; i < src.num_blocks(); ++i) {
    Element image = w.apply(Element::matrix_unit(src, {i, 0, 0}));
    std::vector<int> ranks = image.block_ranks();
    for (int j = 0; j < dst.num_blocks(); ++j) CHECK(ranks[static_cast<size_t>(j)] == n.at(j, i));
  }
}

TEST_CASE("injectivity from everywhere-nonzero columns") {
  MultiMatrixAlgebra src({2, 2});
  MultiMatrixAlgebra dst({6, 4});
  // Every column nonzero: injective on the span of matrix units.
  Wiring w = Wiring::standard(src, dst, MultiplicityMatrix({{1, 1}, {1, 1}}));
  GeneratorMap images(src, dst);
  for (int b = 0; b < src.num_blocks(); ++b)
    for (int r = 0; r < src.block_size(b); ++r)
      for (int c = 0; c < src.block_size(b); ++c)
        images.set_image({b, r, c}, w.apply(Element::matrix_unit(src, {b, r, c})));
  CHECK(images.image_rank() == src.dimension());

  // A dead column kills a block: the kernel is visible in the rank.
  Wiring partial = Wiring::standard(src, dst, MultiplicityMatrix({{1, 0}, {1, 0}}));
  GeneratorMap images2(src, dst);
  for (int b = 0; b < src.num_blocks(); ++b)
    for (int r = 0; r < src.block_size(b); ++r)
      for (int c = 0; c < src.block_size(b); ++c)
        images2.set_image({b, r, c}, partial.apply(Element::matrix_unit(src, {b, r, c})));
  CHECK(images2.image_rank() == 4);
}

TEST_CASE("unitary equivalence is multiplicity equality") {
  MultiMatrixAlgebra src({1, 1});
  MultiMatrixAlgebra dst({3});
  MultiplicityMatrix n({{1, 1}});
  Wiring packed = Wiring::standard(src, dst, n);
  // Same multiplicities, different slots: shift the second line up.
  Wiring shifted(src, dst, {{{{{0}}}, {{{2}}}}});
  CHECK(unitarily_equivalent(packed, packed));
  CHECK(unitarily_equivalent(packed, shifted));
  CHECK_FALSE(packed == shifted);

  MultiMatrixAlgebra other({2});
  CHECK_THROWS_AS(unitarily_equivalent(packed, Wiring::identity(other)), AfbError);
}

TEST_CASE("generator map rejects a non-homomorphism") {
  MultiMatrixAlgebra src({1, 1});
  MultiMatrixAlgebra dst({2});
  GeneratorMap bad(src, dst);
  // Both lines to the same unit: orthogonality violated.
  bad.set_image({0, 0, 0}, Element::matrix_unit(dst, {0, 0, 0}));
  bad.set_image({1, 0, 0}, Element::matrix_unit(dst, {0, 0, 0}));
  CHECK_FALSE(bad.check_homomorphism().empty());
}
