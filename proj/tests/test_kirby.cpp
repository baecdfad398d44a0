#include <catch2/catch_amalgamated.hpp>

#include "cob/compose.hpp"
#include "cob/generate.hpp"
#include "cob/kirby.hpp"
#include "cob/fixtures.hpp"

using namespace cob;

namespace {

std::vector<bool> flags(const ClassificationReport& c) {
  return {c.is_q, c.is_z, c.semi_lagrangian_matrix, c.semi_lagrangian_integral};
}

TripletPresentation random_presentation(SplitMix64& seeds) {
  GeneratorParams p;
  p.family = seeds.coin() ? Family::Z : Family::Q;
  p.g_bottom = static_cast<std::size_t>(seeds.below(3));
  p.g_top = static_cast<std::size_t>(seeds.below(3));
  p.n_link = 1 + static_cast<std::size_t>(seeds.below(4));
  p.seed = seeds.next();
  return gen_semilagrangian(p);
}

}  // namespace

TEST_CASE("stabilization and its inverse") {
  TripletPresentation t = fixtures::rational_only_semilagrangian();
  TripletPresentation up = apply_move(t, Stabilize{+1});
  CHECK(up.n_link == 3);
  CHECK(up.link(2, 2) == 1);
  CHECK(up.link.block(0, 2, 2, 1).is_zero());
  CHECK(h1_filling(up).torsion == std::vector<Int>{Int(4)});
  CHECK(positive_index(up.link) == positive_index(t.link) + 1);

  TripletPresentation down = apply_move(up, Destabilize{2});
  CHECK(down == t);

  TripletPresentation minus = apply_move(t, Stabilize{-1});
  CHECK(positive_index(minus.link) == positive_index(t.link));
}

TEST_CASE("destabilization guards its target") {
  TripletPresentation t = fixtures::rational_only_semilagrangian();
  CHECK_THROWS_AS(apply_move(t, Destabilize{0}), ValidationError);
  CHECK_THROWS_AS(apply_move(t, Destabilize{5}), DimensionError);

  // A +-1 framed component that still links the graph cannot cancel.
  TripletPresentation u = apply_move(t, Stabilize{+1});
  u.bottom_link(0, 2) = 1;
  CHECK_THROWS_AS(apply_move(u, Destabilize{2}), ValidationError);
}

TEST_CASE("link slides") {
  SplitMix64 seeds(61);
  for (int trial = 0; trial < 20; ++trial) {
    TripletPresentation t = random_presentation(seeds);
    if (t.n_link < 2) continue;
    SlideLinkOverLink fwd{0, 1, +1};
    TripletPresentation slid = apply_move(t, fwd);
    CHECK(determinant(slid.link) == determinant(t.link));
    CHECK(validate(slid).empty());
    // The inverse slide undoes everything on the nose.
    CHECK(apply_move(slid, SlideLinkOverLink{0, 1, -1}) == t);
  }
}

TEST_CASE("orientation flip is an involution") {
  SplitMix64 seeds(62);
  TripletPresentation t = random_presentation(seeds);
  TripletPresentation f = apply_move(t, FlipOrientation{0});
  CHECK(f.link(0, 0) == t.link(0, 0));
  CHECK(apply_move(f, FlipOrientation{0}) == t);
}

TEST_CASE("graph slides preserve the rational-form defects") {
  SplitMix64 seeds(63);
  int exercised = 0;
  for (int trial = 0; trial < 30 || exercised < 10; ++trial) {
    TripletPresentation t = random_presentation(seeds);
    if (t.g_bottom == 0 && t.g_top == 0) continue;
    GraphSide side = t.g_bottom > 0 && (t.g_top == 0 || seeds.coin())
                         ? GraphSide::Bottom
                         : GraphSide::Top;
    std::size_t circles = side == GraphSide::Bottom ? t.g_bottom : t.g_top;
    SlideGraphOverLink move{side, static_cast<std::size_t>(seeds.below(circles)),
                            static_cast<std::size_t>(seeds.below(t.n_link)),
                            seeds.coin() ? 1 : -1};
    TripletPresentation slid = apply_move(t, move);
    CHECK(validate(slid).empty());
    ClassificationReport before = classify(t);
    ClassificationReport after = classify(slid);
    REQUIRE(before.is_q);
    CHECK(*after.bottom_defect == *before.bottom_defect);
    CHECK(*after.top_defect == *before.top_defect);
    CHECK(is_integral(*after.cross_term) == is_integral(*before.cross_term));
    ++exercised;
    if (trial > 200) FAIL("could not draw enough graph slides");
  }
}

TEST_CASE("every move preserves homology and classification") {
  SplitMix64 seeds(64);
  for (int trial = 0; trial < 15; ++trial) {
    TripletPresentation t = random_presentation(seeds);
    auto [moved, log] = random_moves(t, seeds.next(), 12);
    CHECK(log.size() == 12);
    CHECK(h1_filling(moved) == h1_filling(t));
    CHECK(h1_cobordism(moved).second == h1_cobordism(t).second);
    CHECK(flags(classify(moved)) == flags(classify(t)));
    CHECK(abs_of(determinant(moved.link)) == abs_of(determinant(t.link)));
  }
}

TEST_CASE("positive index moves only under stabilization") {
  TripletPresentation t = fixtures::rational_only_semilagrangian();
  std::size_t base = positive_index(t.link);
  CHECK(positive_index(apply_move(t, Stabilize{+1}).link) == base + 1);
  CHECK(positive_index(apply_move(t, Stabilize{-1}).link) == base);
  CHECK(positive_index(apply_move(t, SlideLinkOverLink{1, 0, 1}).link) == base);
  CHECK(positive_index(apply_move(t, FlipOrientation{1}).link) == base);
  CHECK(positive_index(
            apply_move(t, SlideGraphOverLink{GraphSide::Bottom, 0, 0, 1}).link) == base);
}

TEST_CASE("thirty moves on the fixed fixture change nothing observable") {
  TripletPresentation t = fixtures::rational_only_semilagrangian();
  auto [moved, log] = random_moves(t, 271828, 30);
  CHECK(log.size() == 30);
  CHECK(flags(classify(moved)) == flags(classify(t)));
  CHECK(h1_filling(moved).order() == Int(4));
  CHECK(h1_cobordism(moved).second == h1_cobordism(t).second);
}

TEST_CASE("random move streams are deterministic") {
  SplitMix64 seeds(65);
  TripletPresentation t = random_presentation(seeds);
  auto [a, log_a] = random_moves(t, 999, 25);
  auto [b, log_b] = random_moves(t, 999, 25);
  CHECK(a == b);
  CHECK(log_a == log_b);
  auto [c, log_c] = random_moves(t, 999, 0);
  CHECK(c == t);
  CHECK(log_c.empty());
}

TEST_CASE("move log grammar") {
  SECTION("fixed lines parse to the expected moves") {
    CHECK(parse_move("slide L 3 over 1 +") == KirbyMove{SlideLinkOverLink{2, 0, 1}});
    CHECK(parse_move("stab -") == KirbyMove{Stabilize{-1}});
    CHECK(parse_move("flip 2") == KirbyMove{FlipOrientation{1}});
    CHECK(parse_move("destab 4") == KirbyMove{Destabilize{3}});
    CHECK(parse_move("slide B 2 over 1 -") ==
          KirbyMove{SlideGraphOverLink{GraphSide::Bottom, 1, 0, -1}});
    CHECK(parse_move("slide T 1 over 2 +") ==
          KirbyMove{SlideGraphOverLink{GraphSide::Top, 0, 1, 1}});
  }
  SECTION("round trip through text") {
    SplitMix64 seeds(66);
    TripletPresentation t = random_presentation(seeds);
    auto [moved, log] = random_moves(t, seeds.next(), 40);
    std::string text = format_move_log(log);
    CHECK(parse_move_log(text) == log);
    // Comments and blank lines are tolerated.
    CHECK(parse_move_log("# comment\n\n  stab +  \n").size() == 1);
  }
  SECTION("malformed lines throw") {
    CHECK_THROWS_AS(parse_move("slide X 1 over 2 +"), ParseError);
    CHECK_THROWS_AS(parse_move("stab 3"), ParseError);
    CHECK_THROWS_AS(parse_move("flip 0"), ParseError);
    CHECK_THROWS_AS(parse_move("destab"), ParseError);
    CHECK_THROWS_AS(parse_move("wiggle 1"), ParseError);
  }
}
