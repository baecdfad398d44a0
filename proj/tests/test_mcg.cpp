#include <catch2/catch_amalgamated.hpp>

#include "cob/generate.hpp"
#include "cob/mcg.hpp"

using namespace cob;

namespace {

// diag(A, (A^T)^-1) for A in GL(g, Z).
SymplecticMap lagrangian_from_block(const IntMatrix& a) {
  std::size_t g = a.rows();
  IntMatrix w(2 * g, 2 * g);
  w.set_block(0, 0, a);
  w.set_block(g, g, to_integral(invert_rational(a.transposed())));
  return SymplecticMap::make(w);
}

IntMatrix random_gl(SplitMix64& rng, std::size_t g) {
  IntMatrix a = random_unimodular(rng, g, 2 * g + 2);
  if (rng.coin()) a.negate_row(0);
  return a;
}

const IntMatrix kShear{{Int(1), Int(1)}, {Int(0), Int(1)}};       // g=1
const IntMatrix kCoShear{{Int(1), Int(0)}, {Int(-1), Int(1)}};    // g=1

}  // namespace

TEST_CASE("symplectic membership") {
  CHECK(is_symplectic(IntMatrix::identity(2), 1));
  CHECK(is_symplectic(IntMatrix::identity(6), 3));
  CHECK(is_symplectic(kShear, 1));
  CHECK(is_symplectic(kCoShear, 1));
  CHECK_FALSE(is_symplectic(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(2)}}, 1));
  CHECK_THROWS_AS(is_symplectic(IntMatrix(3, 3), 1), DimensionError);
  CHECK_THROWS_AS(SymplecticMap::make(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(2)}}),
                  ValidationError);
}

TEST_CASE("the intersection form is preserved, not just determinants") {
  IntMatrix j = intersection_form(2);
  CHECK(j.transposed() == -j);
  CHECK(determinant(j) == 1);
}

TEST_CASE("block-diagonal symplectic maps form the Lagrangian subgroup") {
  CHECK(in_lagrangian_subgroup(SymplecticMap::make(IntMatrix::identity(2))));
  CHECK_FALSE(in_lagrangian_subgroup(SymplecticMap::make(kShear)));

  SplitMix64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t g = 1 + static_cast<std::size_t>(rng.below(5));
    SymplecticMap w = lagrangian_from_block(random_gl(rng, g));
    CHECK(in_lagrangian_subgroup(w));
    CHECK(w.block_bb() == to_integral(invert_rational(w.block_aa().transposed())));
  }
}

TEST_CASE("heegaard filling homology on the fixed mapping classes") {
  CHECK(heegaard_h1(SymplecticMap::make(kShear)).is_trivial());
  CHECK(heegaard_h1(SymplecticMap::make(kCoShear)).is_trivial());
  SymplecticMap product = compose_maps(SymplecticMap::make(kShear),
                                       SymplecticMap::make(kCoShear));
  CHECK(product.action == IntMatrix{{Int(0), Int(1)}, {Int(-1), Int(1)}});
  HomologySummary h = heegaard_h1(product);
  CHECK(h.free_rank == 1);
  CHECK(h.torsion.empty());
  CHECK(heegaard_h1(SymplecticMap::make(IntMatrix::identity(8))).is_trivial());
}

TEST_CASE("unimodular upper block is not closed under composition") {
  auto block_det = [](const SymplecticMap& w) { return determinant(w.block_aa()); };
  SymplecticMap w1 = SymplecticMap::make(kShear);
  SymplecticMap w2 = SymplecticMap::make(kCoShear);
  CHECK(abs_of(block_det(w1)) == 1);
  CHECK(abs_of(block_det(w2)) == 1);
  CHECK(block_det(compose_maps(w1, w2)) == 0);
}

TEST_CASE("composition and inverse stay in the Lagrangian subgroup") {
  SplitMix64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t g = 1 + static_cast<std::size_t>(rng.below(5));
    SymplecticMap w1 = lagrangian_from_block(random_gl(rng, g));
    SymplecticMap w2 = lagrangian_from_block(random_gl(rng, g));
    SymplecticMap prod = compose_maps(w2, w1);
    CHECK(in_lagrangian_subgroup(prod));
    CHECK(in_lagrangian_subgroup(invert_map(w1)));
    CHECK(compose_maps(invert_map(w1), w1).action == IntMatrix::identity(2 * g));
    CHECK(heegaard_h1(prod).is_trivial());
  }
  CHECK_THROWS_AS(compose_maps(SymplecticMap::make(kShear),
                               SymplecticMap::make(IntMatrix::identity(4))),
                  DimensionError);
}

TEST_CASE("heegaard homology depends on the upper block only up to GL(g,Z)") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t g = 1 + static_cast<std::size_t>(rng.below(4));
    // A generic symplectic map: alternate shears in the two triangular
    // one-parameter families and Lagrangian-subgroup elements.
    IntMatrix w = IntMatrix::identity(2 * g);
    for (int step = 0; step < 6; ++step) {
      IntMatrix sym(g, g);
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
          sym(i, j) = Int(rng.int_in(-2, 2));
          sym(j, i) = sym(i, j);
        }
      IntMatrix gen = IntMatrix::identity(2 * g);
      if (rng.coin())
        gen.set_block(0, g, sym);  // [[I, S], [0, I]]
      else
        gen.set_block(g, 0, sym);  // [[I, 0], [S, I]]
      w = w * gen;
      if (rng.coin()) w = w * lagrangian_from_block(random_gl(rng, g)).action;
    }
    SymplecticMap map = SymplecticMap::make(w);
    IntMatrix a = map.block_aa();
    IntMatrix p = random_unimodular(rng, g, 2 * g + 2);
    IntMatrix q = random_unimodular(rng, g, 2 * g + 2);
    CHECK(homology_from_relations(p * a * q) == heegaard_h1(map));
  }
}
