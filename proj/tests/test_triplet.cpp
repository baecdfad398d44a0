#include <catch2/catch_amalgamated.hpp>

#include "cob/compose.hpp"
#include "cob/generate.hpp"
#include "cob/triplet.hpp"
#include "cob/fixtures.hpp"

using namespace cob;

TEST_CASE("validate flags the broken block, not an exception") {
  TripletPresentation t = identity_presentation(2);
  CHECK(validate(t).empty());

  SECTION("asymmetric link block") {
    t = fixtures::rational_only_semilagrangian();
    t.link(0, 1) = 7;
    auto v = validate(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "link block not symmetric");
    CHECK_THROWS_AS(h1_filling(t), ValidationError);
  }
  SECTION("wrong bottom_link row count") {
    t = fixtures::rational_only_semilagrangian();
    t.bottom_link = IntMatrix(2, 2);
    auto v = validate(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "bottom_link block rows != g_bottom");
  }
  SECTION("several violations reported together") {
    t = fixtures::rational_only_semilagrangian();
    t.bottom_link = IntMatrix(2, 3);
    t.top_top = IntMatrix{{Int(0), Int(1)}, {Int(2), Int(3)}};
    CHECK(validate(t).size() >= 3);
  }
}

TEST_CASE("homology of the standard fixture") {
  TripletPresentation t = fixtures::rational_only_semilagrangian();

  HomologySummary fill = h1_filling(t);
  CHECK(fill.free_rank == 0);
  CHECK(fill.torsion == std::vector<Int>{Int(4)});

  auto [pres, cob_h] = h1_cobordism(t);
  CHECK(pres.relations ==
        IntMatrix{{Int(1), Int(1), Int(1), Int(0)}, {Int(1), Int(-3), Int(-1), Int(0)}});
  REQUIRE(pres.generators.size() == 4);
  CHECK(pres.generators[0].name() == "mu1");
  CHECK(pres.generators[2].name() == "m1");
  CHECK(pres.generators[3].name() == "m'1");
  CHECK(cob_h.free_rank == 2);
  CHECK(cob_h.torsion == std::vector<Int>{Int(2)});
}

TEST_CASE("homology of degenerate presentations") {
  SECTION("empty link gives the 3-sphere filling") {
    TripletPresentation t = TripletPresentation::make(2, 1, 0);
    CHECK(h1_filling(t).is_trivial());
    HomologySummary h = h1_cobordism(t).second;
    CHECK(h.free_rank == 3);
    CHECK(h.torsion.empty());
  }
  SECTION("single zero-framed unknot") {
    TripletPresentation t = TripletPresentation::make(0, 0, 1);
    HomologySummary h = h1_filling(t);
    CHECK(h.free_rank == 1);
    CHECK(h.torsion.empty());
  }
}

TEST_CASE("subgroup membership inside the presented homology") {
  TripletPresentation t = fixtures::rational_only_semilagrangian();
  HomologyPresentation p = h1_presentation(t);
  // The class of the pushed-off bottom circle on (mu1, mu2, m, m').
  std::vector<std::vector<Int>> bottom_class{{Int(1), Int(-1), Int(0), Int(-1)}};
  std::vector<std::vector<Int>> top_meridian{{Int(0), Int(0), Int(0), Int(1)}};

  CHECK_FALSE(submodule_leq(p, bottom_class, top_meridian));
  CHECK(submodule_leq_rational(p, bottom_class, top_meridian));
  CHECK(submodule_leq(p, {}, top_meridian));
  CHECK(submodule_leq(p, {}, {}));
  CHECK_THROWS_AS(submodule_leq(p, {{Int(1)}}, top_meridian), DimensionError);
}

TEST_CASE("classification of the fixed examples") {
  SECTION("rational but not integral semi-Lagrangian") {
    ClassificationReport rep = classify(fixtures::rational_only_semilagrangian());
    CHECK(rep.is_q);
    CHECK_FALSE(rep.is_z);
    CHECK(rep.semi_lagrangian_matrix);
    CHECK_FALSE(rep.semi_lagrangian_integral);
    REQUIRE(rep.bottom_defect);
    CHECK(rep.bottom_defect->is_zero());
    CHECK(rep.top_defect->is_zero());
    CHECK(rep.cross_term->is_zero());
  }
  SECTION("half-rank boundary homology without a rational filling") {
    TripletPresentation t = fixtures::surgered_hopf_complement();
    ClassificationReport rep = classify(t);
    CHECK_FALSE(rep.is_q);
    CHECK_FALSE(rep.is_z);
    CHECK_FALSE(rep.bottom_defect.has_value());
    HomologySummary h = h1_cobordism(t).second;
    CHECK(h.free_rank == 1);
    CHECK(h.torsion.empty());
    // rank H1(boundary) = 2(g_bottom + g_top) = 2 = 2 * rank H1(M).
    CHECK(2 * h.free_rank == 2 * (t.g_bottom + t.g_top));
  }
  SECTION("product cobordism") {
    ClassificationReport rep = classify(identity_presentation(3));
    CHECK(rep.is_q);
    CHECK(rep.is_z);
    CHECK(rep.semi_lagrangian_matrix);
    CHECK(rep.semi_lagrangian_integral);
  }
}

TEST_CASE("integral homology sphere cobordisms have free homology of full rank") {
  SplitMix64 seeds(404);
  for (int trial = 0; trial < 25; ++trial) {
    GeneratorParams p;
    p.family = Family::Z;
    p.g_bottom = static_cast<std::size_t>(seeds.below(4));
    p.g_top = static_cast<std::size_t>(seeds.below(4));
    p.n_link = static_cast<std::size_t>(seeds.below(6));
    p.seed = seeds.next();
    TripletPresentation t = gen_semilagrangian(p);
    HomologySummary h = h1_cobordism(t).second;
    CHECK(h.free_rank == p.g_bottom + p.g_top);
    CHECK(h.torsion.empty());
  }
}

TEST_CASE("cobordism torsion only at primes of the filling order") {
  SplitMix64 seeds(405);
  for (int trial = 0; trial < 25; ++trial) {
    GeneratorParams p;
    p.family = Family::Q;
    p.g_bottom = static_cast<std::size_t>(seeds.below(4));
    p.g_top = static_cast<std::size_t>(seeds.below(4));
    p.n_link = 1 + static_cast<std::size_t>(seeds.below(5));
    p.seed = seeds.next();
    TripletPresentation t = gen_semilagrangian(p);
    Int det = abs_of(determinant(t.link));
    for (const Int& d : h1_cobordism(t).second.torsion) {
      // Every prime of d divides det: divide out gcds until nothing is left.
      Int rest = d;
      for (;;) {
        Int g = gcd(rest, det);
        if (g == 1) break;
        while (rest % g == 0) rest /= g;
      }
      CHECK(rest == 1);
    }
  }
}

TEST_CASE("for unimodular fillings the two semi-Lagrangian readings agree") {
  SplitMix64 rng(406);
  for (int trial = 0; trial < 60; ++trial) {
    // Arbitrary blocks over a unimodular link block: usually NOT
    // semi-Lagrangian, but the two flags must still coincide.
    std::size_t n = static_cast<std::size_t>(rng.below(5));
    std::size_t g1 = static_cast<std::size_t>(rng.below(3));
    std::size_t g2 = static_cast<std::size_t>(rng.below(3));
    TripletPresentation t = TripletPresentation::make(g1, g2, n);
    t.link = random_symmetric_unimodular(rng, n, 2 * n + 2);
    auto rnd = [&rng](std::size_t r, std::size_t c) {
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Int(rng.int_in(-3, 3));
      return m;
    };
    t.bottom_link = rnd(g1, n);
    t.top_link = rnd(g2, n);
    IntMatrix d = rnd(g1, g1);
    t.bottom_bottom = d + d.transposed();
    IntMatrix f = rnd(g2, g2);
    t.top_top = f + f.transposed();
    t.top_bottom = rnd(g2, g1);
    ClassificationReport rep = classify(t);
    REQUIRE(rep.is_z);
    CHECK(rep.semi_lagrangian_matrix == rep.semi_lagrangian_integral);
  }
}

TEST_CASE("chain graph complements are free of the genus rank") {
  for (std::size_t g = 0; g <= 20; ++g) {
    HomologySummary h = chain_graph_complement_h1(g);
    INFO("genus " << g);
    CHECK(h.free_rank == g);
    CHECK(h.torsion.empty());
  }
}
