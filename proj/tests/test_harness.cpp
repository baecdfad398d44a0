#include <catch2/catch_amalgamated.hpp>

#include "cob/generate.hpp"
#include "cob/json_io.hpp"
#include "cob/suite.hpp"
#include "cob/fixtures.hpp"

using namespace cob;

TEST_CASE("presentations round-trip through JSON") {
  SplitMix64 seeds(91);
  for (int trial = 0; trial < 25; ++trial) {
    GeneratorParams p;
    p.family = seeds.coin() ? Family::Z : Family::Q;
    p.g_bottom = static_cast<std::size_t>(seeds.below(4));
    p.g_top = static_cast<std::size_t>(seeds.below(4));
    p.n_link = static_cast<std::size_t>(seeds.below(6));
    p.seed = seeds.next();
    TripletPresentation t = gen_semilagrangian(p);
    json j = presentation_to_json(t);
    CHECK(presentation_from_json(j) == t);
    // Entries travel as decimal strings.
    if (t.n_link > 0) CHECK(j["A"][0][0].is_string());
  }
}

TEST_CASE("huge entries survive serialization bit-exactly") {
  TripletPresentation t = TripletPresentation::make(0, 0, 1);
  t.link(0, 0) = Int("123456789012345678901234567890123456789");
  json j = presentation_to_json(t);
  TripletPresentation back = presentation_from_json(j);
  CHECK(back.link(0, 0) == t.link(0, 0));
  CHECK(j["A"][0][0] == "123456789012345678901234567890123456789");
}

TEST_CASE("malformed presentation files are rejected") {
  json good = presentation_to_json(fixtures::rational_only_semilagrangian());

  SECTION("floats are never integers") {
    json j = good;
    j["A"][0][0] = 1.5;
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
  }
  SECTION("missing field") {
    json j = good;
    j.erase("E");
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
  }
  SECTION("wrong version") {
    json j = good;
    j["version"] = 2;
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
  }
  SECTION("dimension mismatch between header and blocks") {
    json j = good;
    j["n_link"] = 3;
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
  }
  SECTION("garbage integer strings") {
    json j = good;
    j["A"][0][0] = "12x";
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
    j["A"][0][0] = "";
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
  }
  SECTION("plain integers are accepted on input") {
    json j = good;
    j["A"][0][0] = 1;
    CHECK(presentation_from_json(j) == fixtures::rational_only_semilagrangian());
  }
}

TEST_CASE("suite reports are deterministic apart from timing") {
  SuiteReport a = run_suite(12, 777);
  SuiteReport b = run_suite(12, 777);
  json ja = a.to_json();
  json jb = b.to_json();
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  CHECK(ja == jb);
  CHECK(ja["rng"] == kRngAlgorithm);
  CHECK(a.all_passed());
  CHECK(a.total_failures() == 0);
  for (const auto& c : a.checks) CHECK(c.passed == 12);
}

TEST_CASE("trial replay reproduces trial outcomes") {
  for (std::uint64_t trial : {0ull, 3ull, 7ull}) {
    CHECK(replay_trial(777, trial).empty());
    // Determinism: replaying twice agrees.
    CHECK(replay_trial(777, trial) == replay_trial(777, trial));
  }
}

TEST_CASE("the portable generator is pinned") {
  // Reference values for splitmix64 seeded with 0; any change here breaks
  // replayability of recorded witnesses.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 bounded(42);
  for (int k = 0; k < 50; ++k) {
    auto v = bounded.int_in(-5, 5);
    CHECK(v >= -5);
    CHECK(v <= 5);
  }
}

TEST_CASE("suite rejects an empty run") {
  CHECK_THROWS_AS(run_suite(0, 1), DimensionError);
}
